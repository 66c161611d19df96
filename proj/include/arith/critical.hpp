#pragma once

#include <span>
#include <vector>

#include "arith/structure.hpp"

namespace arith {

struct CriticalGroup {
    std::vector<Integer> invariant_factors;  // each > 1, each divides the next
    Integer order = 1;                       // product of the factors
    std::size_t free_rank = 0;               // 0 for every arithmetical structure

    friend bool operator==(const CriticalGroup&, const CriticalGroup&) = default;
};

/// Ker(r^T) / Im(diag(d) - A) for a structure (d, r). Throws NotAStructure.
CriticalGroup critical_group(const IntMatrix& adjacency, std::span<const Integer> d, std::span<const Integer> r);

/// Ker(r^T) / Im(L) for any square L and non-zero r. Each column of L is
/// expressed in a Hermite basis of Ker(r^T); a column outside that lattice
/// throws BasisExpressionFailure.
CriticalGroup critical_group_of(const IntMatrix& l, std::span<const Integer> r);

/// Compares the quotients for (M, r) and (M_q, (r, x)). Errors as blowup_mq.
bool blowup_preserves_critical_group(const IntMatrix& m, std::span<const Integer> r, std::span<const Integer> q);

}  // namespace arith
