#include "arith/structure.hpp"

#include <algorithm>

#include "arith/error.hpp"
#include "arith/exact_linalg.hpp"

namespace arith {

bool StructureSet::contains(const ArithStructure& s) const {
    return std::binary_search(structures.begin(), structures.end(), s);
}

void canonicalize(std::vector<ArithStructure>& structures) {
    std::sort(structures.begin(), structures.end());
    structures.erase(std::unique(structures.begin(), structures.end()), structures.end());
}

namespace {

void check_dims(const IntMatrix& a, std::size_t len, const char* name) {
    if (!a.is_square() || a.size() != len)
        throw Error(ErrorKind::DimensionMismatch, std::string(name) + " has length " + std::to_string(len) +
                                                      " but the matrix has order " + std::to_string(a.rows()));
}

// First violated structure condition, or empty when (d, r) is a structure.
std::string violation(const IntMatrix& a, std::span<const Integer> d, std::span<const Integer> r) {
    check_dims(a, d.size(), "d");
    check_dims(a, r.size(), "r");
    if (!all_positive(d)) return "d has a non-positive entry";
    if (!all_positive(r)) return "r has a non-positive entry";
    if (!is_primitive(r)) return "r is not primitive (gcd " + gcd_of(r).get_str() + ")";
    const IntVector ar = a * r;
    for (std::size_t v = 0; v < r.size(); ++v)
        if (d[v] * r[v] != ar[v])
            return "relation fails at vertex " + std::to_string(v) + ": " + Integer(d[v] * r[v]).get_str() +
                   " != " + ar[v].get_str();
    return {};
}

}  // namespace

bool is_arithmetical(const IntMatrix& adjacency, std::span<const Integer> d, std::span<const Integer> r) {
    return violation(adjacency, d, r).empty();
}

void require_structure(const IntMatrix& adjacency, std::span<const Integer> d, std::span<const Integer> r) {
    const std::string why = violation(adjacency, d, r);
    if (!why.empty()) throw Error(ErrorKind::NotAStructure, why);
}

std::optional<IntVector> d_from_r(const IntMatrix& adjacency, std::span<const Integer> r) {
    check_dims(adjacency, r.size(), "r");
    if (!all_positive(r) || !is_primitive(r)) return std::nullopt;
    const IntVector ar = adjacency * r;
    IntVector d(r.size());
    for (std::size_t v = 0; v < r.size(); ++v) {
        if (sgn(ar[v]) <= 0 || !mpz_divisible_p(ar[v].get_mpz_t(), r[v].get_mpz_t())) return std::nullopt;
        mpz_divexact(d[v].get_mpz_t(), ar[v].get_mpz_t(), r[v].get_mpz_t());
    }
    return d;
}

std::optional<IntVector> r_from_d(const IntMatrix& adjacency, std::span<const Integer> d) {
    check_dims(adjacency, d.size(), "d");
    if (!all_positive(d)) return std::nullopt;
    const auto kernel = integer_kernel(laplacian_like(adjacency, d));
    if (kernel.size() != 1) return std::nullopt;
    IntVector r = kernel.front();
    if (sgn(r.front()) < 0)
        for (auto& x : r) x = -x;
    if (!all_positive(r)) return std::nullopt;
    return r;
}

}  // namespace arith
