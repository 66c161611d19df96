#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arith/graph.hpp"
#include "arith/int_matrix.hpp"

namespace arith {

/// A pair (d, r) of positive vectors with r primitive and (diag(d) - A) r = 0.
/// Ordered lexicographically by (r, d).
struct ArithStructure {
    IntVector d;
    IntVector r;

    friend bool operator==(const ArithStructure&, const ArithStructure&) = default;
    friend bool operator<(const ArithStructure& a, const ArithStructure& b) {
        if (a.r != b.r) return a.r < b.r;
        return a.d < b.d;
    }
};

struct StructureSet {
    Graph graph;
    std::vector<ArithStructure> structures;  // sorted, no duplicates
    bool complete = false;                   // certified-complete enumeration
    std::optional<std::int64_t> r_cap;       // bound used by a bounded search

    std::size_t size() const { return structures.size(); }
    bool contains(const ArithStructure& s) const;
};

/// Sort by (r, d) and drop duplicates.
void canonicalize(std::vector<ArithStructure>& structures);

bool is_arithmetical(const IntMatrix& adjacency, std::span<const Integer> d, std::span<const Integer> r);

/// d_i = (A r)_i / r_i when every quotient is exact and positive. Absent when r
/// is not positive and primitive or any division fails.
std::optional<IntVector> d_from_r(const IntMatrix& adjacency, std::span<const Integer> r);

/// The positive primitive generator of ker(diag(d) - A) when that kernel has
/// rank one and such a generator exists.
std::optional<IntVector> r_from_d(const IntMatrix& adjacency, std::span<const Integer> d);

/// Throws NotAStructure with a message naming the first violated condition.
void require_structure(const IntMatrix& adjacency, std::span<const Integer> d, std::span<const Integer> r);

}  // namespace arith
