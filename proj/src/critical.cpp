#include "arith/critical.hpp"

#include <algorithm>

#include "arith/error.hpp"
#include "arith/exact_linalg.hpp"
#include "arith/transforms.hpp"

namespace arith {

CriticalGroup critical_group(const IntMatrix& adjacency, std::span<const Integer> d, std::span<const Integer> r) {
    require_structure(adjacency, d, r);
    return critical_group_of(laplacian_like(adjacency, d), r);
}

CriticalGroup critical_group_of(const IntMatrix& l, std::span<const Integer> r) {
    if (!l.is_square() || l.size() != r.size())
        throw Error(ErrorKind::DimensionMismatch, "L and r disagree in size");
    if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; }))
        throw Error(ErrorKind::InvalidArgument, "r is zero");
    const std::size_t n = l.size();
    const auto basis = kernel_complement_basis(r);

    IntMatrix coords(basis.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto c = lattice_coordinates(basis, l.column(j));
        if (!c)
            throw Error(ErrorKind::BasisExpressionFailure,
                        "column " + std::to_string(j) + " of L is not in Ker(r^T)");
        for (std::size_t i = 0; i < basis.size(); ++i) coords(i, j) = (*c)[i];
    }

    CriticalGroup g;
    if (basis.empty()) return g;
    const auto snf = smith_normal_form(coords);
    for (const auto& x : snf.diag) {
        if (x == 0) ++g.free_rank;
        else if (x > 1) {
            g.invariant_factors.push_back(x);
            g.order *= x;
        }
    }
    // diag covers min(rows, cols) = rows entries, so free_rank counts every
    // missing generator.
    return g;
}

bool blowup_preserves_critical_group(const IntMatrix& m, std::span<const Integer> r, std::span<const Integer> q) {
    const Blowup b = blowup_mq(m, q, r);
    IntVector rx(r.begin(), r.end());
    rx.push_back(b.x);
    return critical_group_of(m, r) == critical_group_of(b.mq, rx);
}

}  // namespace arith
