#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arith/int_matrix.hpp"

namespace arith {

/// Exact determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& m);

enum class MinorScope {
    All,      // every proper non-empty index subset (2^n - 2 minors)
    Leading,  // leading minors 1..n-1 only; screening, never a final verdict
};

struct MinorCheck {
    bool positive = true;
    // First violating subset (0-based, sorted) in size-then-lexicographic order.
    std::optional<std::vector<std::size_t>> witness;
};

/// True iff det(M[S]) > 0 for every proper non-empty S. Vacuously true for n = 1.
MinorCheck proper_principal_minors_positive(const IntMatrix& m, MinorScope scope = MinorScope::All);

/// Enumerate index subsets of {0..n-1} of the given size in lexicographic order.
/// The callback returns false to stop early.
template <class F>
void for_each_subset(std::size_t n, std::size_t size, F&& f) {
    if (size > n) return;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        if (!f(std::span<const std::size_t>(idx))) return;
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
        if (k == 0) return;
        ++idx[k - 1];
        for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// left * M * right = diag(values) with a divisibility chain on the non-zero
/// prefix; zeros come last. left and right are unimodular.
struct SNFResult {
    IntVector diag;
    IntMatrix left;
    IntMatrix right;
};

SNFResult smith_normal_form(const IntMatrix& m);

/// Row-style Hermite form: transform * M = form, form in reduced upper echelon
/// shape with positive pivots and entries above each pivot in [0, pivot).
struct HNFResult {
    IntMatrix form;
    IntMatrix transform;
    std::size_t rank = 0;
};

HNFResult hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis of {v : M v = 0} over the integers, in row Hermite form. Every basis
/// vector is primitive. Empty iff M is non-singular.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Basis of the rank n-1 lattice {x in Z^n : r.x = 0}, in row Hermite form.
/// Accepts any non-zero r; callers in this library pass positive kernels.
std::vector<IntVector> kernel_complement_basis(std::span<const Integer> r);

/// Unimodular U with r^T U = (gcd(r), 0, ..., 0), together with its inverse.
struct GcdTransform {
    Integer gcd;
    IntMatrix transform;
    IntMatrix inverse;
};

GcdTransform gcd_column_transform(std::span<const Integer> r);

/// Coordinates c with sum_i c_i * basis[i] == x, for a basis in row Hermite
/// form. Absent when x is not in the integer span.
std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& hermite_basis,
                                             std::span<const Integer> x);

}  // namespace arith
