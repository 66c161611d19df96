#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arith/int_matrix.hpp"

namespace arith {

enum class Family { Path, Cycle, Star, Complete, Wheel, Custom };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& name);

struct FamilyTag {
    Family family = Family::Custom;
    std::size_t n = 0;

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Labeled (multi)graph. Star and wheel graphs put the hub at index 0 (v0) and
/// the leaves / rim at 1..n; the other families are labeled v1..vn.
struct Graph {
    IntMatrix adjacency;
    FamilyTag tag;
    std::vector<std::string> labels;

    std::size_t order() const { return adjacency.size(); }
    // "wheel:6" for family graphs, "custom:<order>" otherwise.
    std::string spec() const;
};

Graph make_graph(Family family, std::size_t n);

/// Wraps an arbitrary adjacency matrix. Entries must be non-negative with a zero
/// diagonal; symmetry is required unless `require_symmetric` is false.
Graph make_custom_graph(IntMatrix adjacency, bool require_symmetric = true);

/// diag(d) - A.
IntMatrix laplacian_like(const IntMatrix& adjacency, std::span<const Integer> d);

/// Row sums of A; the degree vector for simple graphs.
IntVector degree_vector(const IntMatrix& adjacency);

/// Strong connectivity of the support digraph (i -> j when m(i, j) != 0, i != j).
bool is_irreducible(const IntMatrix& m);

/// Membership in the class of generalized graphs: irreducible with n >= 2.
/// Throws InvalidGeneralizedGraph on a negative entry or non-zero diagonal.
bool in_generalized_class(const IntMatrix& adjacency);

void validate_generalized_graph(const IntMatrix& adjacency);

}  // namespace arith
