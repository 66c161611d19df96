#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arith/exact_linalg.hpp"

namespace arith {

// M-matrix membership is decided by the principal-minor characterization
// (a Z-matrix is a possibly singular M-matrix iff every principal minor is
// non-negative); no spectral radius is ever computed.
struct MatrixClass {
    bool is_z = false;
    bool is_m = false;
    bool is_almost_nonsingular_m = false;
    bool is_irreducible = false;
    Integer det;
    // First principal minor breaking the almost non-singular condition: a proper
    // subset whose minor is <= 0, or the full index set when only det < 0.
    std::optional<std::vector<std::size_t>> failing_minor;

    bool is_nonsingular_m() const { return is_m && sgn(det) > 0; }
};

bool is_z_matrix(const IntMatrix& m);

MatrixClass classify(const IntMatrix& m);

/// Diagonal perturbations used when sampling the almost-non-singular
/// equivalence: I, 2I, every unit e_i, and `random_trials` random positive
/// diagonals (entries in [1, 5]) from a fixed seed.
std::vector<IntVector> default_diagonal_samples(std::size_t n, std::size_t random_trials = 1,
                                                std::uint64_t seed = 0x5eed);

struct EquivalenceEvidence {
    bool almost_nonsingular = false;       // condition (1) on M itself
    bool det_nonnegative = false;
    bool shifts_nonsingular_m = true;      // M + D is a non-singular M-matrix for every sample
    bool chain_holds = true;               // det(M + D) > det(M + D') > 0 for sampled D > D'
    bool consistent = true;                // (1) agreed with the sampled conditions every time
    std::size_t samples_checked = 0;
    std::size_t pairs_checked = 0;

    // The sampled evidence confirms M satisfies the equivalent conditions and
    // the equivalence never failed.
    bool verified() const {
        return consistent && almost_nonsingular && shifts_nonsingular_m && chain_holds && det_nonnegative;
    }
};

/// Samples each non-zero, non-negative diagonal D and compares the verdicts of
/// the three equivalent conditions. Throws NotZMatrix.
EquivalenceEvidence almost_nonsingular_evidence(const IntMatrix& m, const std::vector<IntVector>& diagonal_samples);

bool verify_thm_almost_nonsingular_equivalence(const IntMatrix& m, const std::vector<IntVector>& diagonal_samples);

struct PositiveKernelVerdict {
    bool m_matrix = false;
    bool almost_nonsingular_det0_iff_irreducible = false;
};

/// Checks the positive-kernel criterion on a concrete Z-matrix M with M r = 0.
/// Throws NotZMatrix, KernelMismatch (M r != 0), or InvalidArgument (r not positive).
PositiveKernelVerdict verify_thm_positive_kernel(const IntMatrix& m, std::span<const Integer> r);

}  // namespace arith
