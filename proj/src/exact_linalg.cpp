#include "arith/exact_linalg.hpp"

#include <numeric>

#include "arith/error.hpp"

namespace arith {
namespace {

void require_square(const IntMatrix& m, const char* what) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a square matrix");
}

// Smallest |a(i, j)| != 0 over i in [r0, rows), j in [c0, c1); ties by lowest row, then column.
bool locate_min_pivot(const IntMatrix& a, std::size_t r0, std::size_t c0, std::size_t c1,
                      std::size_t& prow, std::size_t& pcol) {
    bool found = false;
    Integer best;
    for (std::size_t i = r0; i < a.rows(); ++i)
        for (std::size_t j = c0; j < c1; ++j) {
            const Integer& x = a(i, j);
            if (sgn(x) == 0) continue;
            if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                found = true;
                best = abs(x);
                prow = i;
                pcol = j;
            }
        }
    return found;
}

}  // namespace

Integer det(const IntMatrix& m) {
    require_square(m, "det");
    const std::size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

MinorCheck proper_principal_minors_positive(const IntMatrix& m, MinorScope scope) {
    require_square(m, "principal minors");
    const std::size_t n = m.size();
    MinorCheck out;
    if (scope == MinorScope::Leading) {
        for (std::size_t k = 1; k < n; ++k) {
            std::vector<std::size_t> idx(k);
            std::iota(idx.begin(), idx.end(), 0);
            if (sgn(det(m.principal(idx))) <= 0) {
                out.positive = false;
                out.witness = idx;
                return out;
            }
        }
        return out;
    }
    for (std::size_t size = 1; size < n && out.positive; ++size) {
        for_each_subset(n, size, [&](std::span<const std::size_t> idx) {
            if (sgn(det(m.principal(idx))) > 0) return true;
            out.positive = false;
            out.witness = std::vector<std::size_t>(idx.begin(), idx.end());
            return false;
        });
    }
    return out;
}

SNFResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t steps = std::min(rows, cols);
    Integer q;

    for (std::size_t t = 0; t < steps; ++t) {
        bool settled = false;
        while (!settled) {
            std::size_t pr = t, pc = t;
            if (!locate_min_pivot(a, t, t, cols, pr, pc)) break;
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (sgn(a(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (sgn(a(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block; otherwise fold an
            // offending row into the pivot row and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            settled = divides;
        }
        if (sgn(a(t, t)) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SNFResult out{IntVector(steps), std::move(u), std::move(v)};
    for (std::size_t t = 0; t < steps; ++t) out.diag[t] = a(t, t);
    return out;
}

HNFResult hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix t = IntMatrix::identity(m.rows());
    std::size_t r = 0;
    Integer q;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        bool have_pivot = false;
        while (true) {
            std::size_t pr = r, pc = c;
            if (!locate_min_pivot(a, r, c, c + 1, pr, pc)) break;
            have_pivot = true;
            a.swap_rows(r, pr);
            t.swap_rows(r, pr);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (sgn(a(i, c)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                a.add_row_multiple(i, r, -q);
                t.add_row_multiple(i, r, -q);
                if (sgn(a(i, c)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) continue;
        if (sgn(a(r, c)) < 0) {
            a.negate_row(r);
            t.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            a.add_row_multiple(i, r, -q);
            t.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return {std::move(a), std::move(t), r};
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

namespace {

std::vector<IntVector> hermite_rows(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) return {};
    HNFResult h = hermite_normal_form(IntMatrix::from_rows(vectors));
    std::vector<IntVector> out;
    out.reserve(h.rank);
    for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.form.row(i));
    return out;
}

}  // namespace

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
    SNFResult snf = smith_normal_form(m);
    std::size_t r = 0;
    while (r < snf.diag.size() && sgn(snf.diag[r]) != 0) ++r;
    std::vector<IntVector> cols;
    for (std::size_t j = r; j < m.cols(); ++j) cols.push_back(snf.right.column(j));
    return hermite_rows(cols);
}

GcdTransform gcd_column_transform(std::span<const Integer> r) {
    const std::size_t n = r.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty vector");
    IntVector w(r.begin(), r.end());
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix inv = IntMatrix::identity(n);
    Integer q;
    while (true) {
        std::size_t p = n;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(w[j]) != 0 && (p == n || mpz_cmpabs(w[j].get_mpz_t(), w[p].get_mpz_t()) < 0)) p = j;
        if (p == n) throw Error(ErrorKind::InvalidArgument, "zero vector has no gcd transform");
        if (p != 0) {
            std::swap(w[0], w[p]);
            u.swap_cols(0, p);
            inv.swap_rows(0, p);
        }
        bool clean = true;
        for (std::size_t j = 1; j < n; ++j) {
            if (sgn(w[j]) == 0) continue;
            mpz_tdiv_q(q.get_mpz_t(), w[j].get_mpz_t(), w[0].get_mpz_t());
            w[j] -= q * w[0];
            // col_j -= q col_0 on U; the inverse picks up row_0 += q row_j.
            u.add_col_multiple(j, 0, -q);
            inv.add_row_multiple(0, j, q);
            if (sgn(w[j]) != 0) clean = false;
        }
        if (clean) break;
    }
    if (sgn(w[0]) < 0) {
        w[0] = -w[0];
        u.negate_col(0);
        inv.negate_row(0);
    }
    return {w[0], std::move(u), std::move(inv)};
}

std::vector<IntVector> kernel_complement_basis(std::span<const Integer> r) {
    GcdTransform g = gcd_column_transform(r);
    std::vector<IntVector> cols;
    for (std::size_t j = 1; j < r.size(); ++j) cols.push_back(g.transform.column(j));
    return hermite_rows(cols);
}

std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& hermite_basis,
                                             std::span<const Integer> x) {
    IntVector residual(x.begin(), x.end());
    IntVector coords(hermite_basis.size());
    for (std::size_t i = 0; i < hermite_basis.size(); ++i) {
        const IntVector& b = hermite_basis[i];
        if (b.size() != x.size()) throw Error(ErrorKind::DimensionMismatch, "basis vector length");
        std::size_t p = 0;
        while (p < b.size() && sgn(b[p]) == 0) ++p;
        if (p == b.size()) throw Error(ErrorKind::InvalidArgument, "zero basis vector");
        if (!mpz_divisible_p(residual[p].get_mpz_t(), b[p].get_mpz_t())) return std::nullopt;
        mpz_divexact(coords[i].get_mpz_t(), residual[p].get_mpz_t(), b[p].get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) residual[j] -= coords[i] * b[j];
    }
    for (const auto& e : residual)
        if (sgn(e) != 0) return std::nullopt;
    return coords;
}

}  // namespace arith
