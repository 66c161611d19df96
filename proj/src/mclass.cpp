#include "arith/mclass.hpp"

#include <random>

#include "arith/error.hpp"
#include "arith/graph.hpp"

namespace arith {

bool is_z_matrix(const IntMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && sgn(m(i, j)) > 0) return false;
    return true;
}

MatrixClass classify(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "classify needs a square matrix");
    const std::size_t n = m.size();
    MatrixClass c;
    c.is_z = is_z_matrix(m);
    c.is_irreducible = is_irreducible(m);
    c.det = det(m);

    bool proper_positive = true;
    bool all_nonnegative = sgn(c.det) >= 0;
    for (std::size_t size = 1; size < n; ++size) {
        for_each_subset(n, size, [&](std::span<const std::size_t> idx) {
            const int s = sgn(det(m.principal(idx)));
            if (s < 0) all_nonnegative = false;
            if (s <= 0 && proper_positive) {
                proper_positive = false;
                c.failing_minor = std::vector<std::size_t>(idx.begin(), idx.end());
            }
            return true;
        });
    }
    if (proper_positive && sgn(c.det) < 0) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        c.failing_minor = std::move(all);
    }
    c.is_m = c.is_z && all_nonnegative;
    c.is_almost_nonsingular_m = c.is_z && proper_positive && sgn(c.det) >= 0;
    return c;
}

std::vector<IntVector> default_diagonal_samples(std::size_t n, std::size_t random_trials, std::uint64_t seed) {
    std::vector<IntVector> samples;
    samples.push_back(IntVector(n, Integer(1)));
    samples.push_back(IntVector(n, Integer(2)));
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = 1;
        samples.push_back(std::move(e));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 5);
    for (std::size_t t = 0; t < random_trials; ++t) {
        IntVector d(n);
        for (auto& x : d) x = dist(rng);
        samples.push_back(std::move(d));
    }
    return samples;
}

namespace {

IntMatrix shifted(const IntMatrix& m, const IntVector& d) { return m + IntMatrix::diagonal(d); }

// d >= e entrywise and d != e.
bool dominates(const IntVector& d, const IntVector& e) {
    bool strict = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < e[i]) return false;
        if (d[i] > e[i]) strict = true;
    }
    return strict;
}

void check_diagonal(const IntVector& d, std::size_t n) {
    if (d.size() != n) throw Error(ErrorKind::DimensionMismatch, "diagonal sample length");
    bool nonzero = false;
    for (const auto& x : d) {
        if (sgn(x) < 0) throw Error(ErrorKind::InvalidArgument, "diagonal samples must be non-negative");
        if (sgn(x) > 0) nonzero = true;
    }
    if (!nonzero) throw Error(ErrorKind::InvalidArgument, "diagonal samples must be non-zero");
}

}  // namespace

EquivalenceEvidence almost_nonsingular_evidence(const IntMatrix& m, const std::vector<IntVector>& diagonal_samples) {
    if (!is_z_matrix(m)) throw Error(ErrorKind::NotZMatrix, "matrix has a positive off-diagonal entry");
    const std::size_t n = m.size();
    for (const auto& d : diagonal_samples) check_diagonal(d, n);

    const MatrixClass base = classify(m);
    EquivalenceEvidence ev;
    ev.almost_nonsingular = base.is_almost_nonsingular_m;
    ev.det_nonnegative = sgn(base.det) >= 0;

    std::vector<IntVector> samples = diagonal_samples;
    // A failing proper minor on S survives any shift supported off S, so a large
    // shift there must break condition (2). Adding it makes the "not almost
    // non-singular" direction checkable by sampling.
    if (!base.is_almost_nonsingular_m && base.failing_minor && base.failing_minor->size() < n) {
        IntVector d(n, Integer(0));
        std::vector<char> in_s(n, 0);
        for (auto i : *base.failing_minor) in_s[i] = 1;
        Integer big = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) big += abs(m(i, j));
        for (std::size_t i = 0; i < n; ++i)
            if (!in_s[i]) d[i] = big;
        samples.push_back(std::move(d));
    }

    std::vector<Integer> dets;
    bool some_shift_fails = false;
    for (const auto& d : samples) {
        const MatrixClass c = classify(shifted(m, d));
        dets.push_back(c.det);
        ++ev.samples_checked;
        if (!c.is_nonsingular_m()) {
            ev.shifts_nonsingular_m = false;
            some_shift_fails = true;
        }
    }
    bool some_chain_fails = false;
    for (std::size_t a = 0; a < samples.size(); ++a)
        for (std::size_t b = 0; b < samples.size(); ++b) {
            if (!dominates(samples[a], samples[b])) continue;
            ++ev.pairs_checked;
            if (!(dets[a] > dets[b] && sgn(dets[b]) > 0)) {
                ev.chain_holds = false;
                some_chain_fails = true;
            }
        }

    if (base.is_almost_nonsingular_m) {
        ev.consistent = !some_shift_fails && !some_chain_fails && ev.det_nonnegative;
    } else {
        // Both (2) and (3) must be refuted by some witness.
        const bool cond2_refuted = some_shift_fails;
        const bool cond3_refuted = !ev.det_nonnegative || some_chain_fails || some_shift_fails;
        ev.consistent = cond2_refuted && cond3_refuted;
    }
    return ev;
}

bool verify_thm_almost_nonsingular_equivalence(const IntMatrix& m, const std::vector<IntVector>& diagonal_samples) {
    return almost_nonsingular_evidence(m, diagonal_samples).verified();
}

PositiveKernelVerdict verify_thm_positive_kernel(const IntMatrix& m, std::span<const Integer> r) {
    if (!is_z_matrix(m)) throw Error(ErrorKind::NotZMatrix, "matrix has a positive off-diagonal entry");
    if (r.size() != m.size()) throw Error(ErrorKind::DimensionMismatch, "kernel vector length");
    if (!all_positive(r)) throw Error(ErrorKind::InvalidArgument, "kernel vector must be positive");
    for (const auto& x : m * r)
        if (sgn(x) != 0) throw Error(ErrorKind::KernelMismatch, "M r != 0");
    const MatrixClass c = classify(m);
    PositiveKernelVerdict v;
    v.m_matrix = c.is_m;
    v.almost_nonsingular_det0_iff_irreducible = (c.is_almost_nonsingular_m && sgn(c.det) == 0) == c.is_irreducible;
    return v;
}

}  // namespace arith
