#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arith/structure.hpp"

namespace arith {

// ---------------------------------------------------------------------------
// Clique-star

struct CliqueStar {
    Graph graph;  // new vertex appended at index n
    std::optional<ArithStructure> structure;
};

/// Removes one edge between every pair of `clique` and joins a new vertex to
/// every clique member. The structure image adds 1 to d on the clique and gives
/// the new vertex d = 1, r = sum of the clique's r. Throws NotAClique.
CliqueStar clique_star(const Graph& graph, std::span<const std::size_t> clique,
                       const std::optional<ArithStructure>& structure = std::nullopt);

// ---------------------------------------------------------------------------
// Blowups

struct BlowupSpec {
    IntVector p;
    IntVector q;
    Integer g;  // gcd of q
    Integer x;  // sum q_i r_i
};

BlowupSpec make_blowup_spec(std::span<const Integer> p, std::span<const Integer> q, std::span<const Integer> r);

struct Blowup {
    IntMatrix mq;        // [[M + q q^T, -q], [-q^T, 1]]
    IntMatrix mq_minus;  // [[M - q q^T, q], [q^T, 1]]
    Integer x;
};

/// Throws KernelMismatch when M r != 0 and ZeroX when sum q_i r_i = 0.
/// M_q annihilates (r, x); mq_minus is assembled as written and is not
/// guaranteed to (its last residue entry is 2x).
Blowup blowup_mq(const IntMatrix& m, std::span<const Integer> q, std::span<const Integer> r);

/// M_q without the kernel preconditions.
IntMatrix blowup_matrix(const IntMatrix& m, std::span<const Integer> q);

/// P M_q Q == diag(M, 1) with P = [[I, q], [0, 1]] and Q = [[I, 0], [q^T, 1]].
bool pq_conjugation_check(const IntMatrix& m, std::span<const Integer> q);

struct MatrixBlowup {
    IntMatrix matrix;  // new vertex first
    ArithStructure structure;
};

/// B = [[1, -q^T], [-p, p q^T + M]] with (d^, r^) = ((1, d_i + p_i q_i), (sum r_j q_j, r)).
/// Throws NonPositivePQ, DimensionMismatch, KernelMismatch.
MatrixBlowup generalized_blowup_m(const IntMatrix& m, std::span<const Integer> d, std::span<const Integer> r,
                                  std::span<const Integer> p, std::span<const Integer> q);

struct GeneralizedBlowup {
    IntMatrix adjacency;  // new vertex first
    ArithStructure structure;
    bool raw = false;     // a negative entry: not a generalized graph
};

/// A~ = [[0, q^T], [p, A - (p q^T - diag(p_i q_i)) / g]], g = gcd(q), with
/// d^ = (g, d_i + p_i q_i / g) and r^ = (sum r_j q_j / g, r).
/// Throws NonPositivePQ, IntegralityViolation (g does not divide every p_i q_j),
/// KernelMismatch.
GeneralizedBlowup generalized_blowup_a(const IntMatrix& adjacency, std::span<const Integer> d,
                                       std::span<const Integer> r, std::span<const Integer> p,
                                       std::span<const Integer> q);

// ---------------------------------------------------------------------------
// Cycle to wheel

/// (d, r) on C_n with every r_i dividing S = sum r gives ((1, d_i + S / r_i), (S, r))
/// on W_n. Throws NotAStructure, DivisibilityViolation.
ArithStructure cycle_to_wheel_divisor(std::span<const Integer> d, std::span<const Integer> r);

/// r on C_n and a hub value r0 with lcm(r) | r0 | S gives (r0, r) on W_n with
/// d = (S / r0, d_i + r0 / r_i). The rim keeps the input order.
/// Throws NotAStructure, PreconditionViolation.
ArithStructure cycle_to_wheel_lcm(std::span<const Integer> r, const Integer& r0);

/// Every r0 accepted by cycle_to_wheel_lcm for this r, ascending.
std::vector<Integer> cycle_to_wheel_lcm_hubs(std::span<const Integer> r);

/// L(C_n, d) r = a 1 with a | S gives ((S / a, d), (a, r) / gcd(a, r)) on W_n.
/// Throws AffineResidueNotConstant, DivisibilityViolation.
ArithStructure cycle_to_wheel_affine(std::span<const Integer> d, std::span<const Integer> r, const Integer& a);

// ---------------------------------------------------------------------------
// Wheels

/// ((1, n + 2, ..., n + 2), (n, 1, ..., 1)) on W_n.
ArithStructure wheel_unit_structure(std::size_t n);

/// Inserts rim vertex v_{n+1} between v_n and v_1 (the edge v_1 v_n is removed).
/// Needs r0 | r1 + rn, r1 | r0 and rn | r0. Throws NotAStructure, PreconditionViolation.
ArithStructure wheel_extend(std::span<const Integer> d, std::span<const Integer> r);

/// rho(c)(r0, r1, ..., rn) = (r0, r_{c+1}, ..., r_{c+n}), rim indices mod n.
IntVector zn_rotate(std::span<const Integer> r, std::size_t c);

/// Distinct images of r under the rim rotations c = 0..n-1, in order of c.
/// Throws NotAStructure when r is not an r-structure on W_n.
std::vector<IntVector> zn_orbit(std::size_t n, std::span<const Integer> r);

}  // namespace arith
