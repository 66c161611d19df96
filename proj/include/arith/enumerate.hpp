#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "arith/structure.hpp"

namespace arith {

inline constexpr std::int64_t kDefaultRCap = 64;

// Largest n accepted by the certified enumerators.
inline constexpr std::size_t kMaxCertifiedStar = 6;
inline constexpr std::size_t kMaxCertifiedPathCycle = 10;

/// Worker count from ARITH_THREADS, defaulting to the hardware concurrency.
unsigned worker_count();

/// All structures on the star with `leaves` leaves (hub at index 0), from the
/// nondecreasing Egyptian-fraction solutions of d0 = sum 1/d_i expanded over
/// distinct permutations; r0 = lcm(d_i), r_i = r0 / d_i.
std::vector<ArithStructure> star_structures(std::size_t leaves);

/// |star_structures(leaves)| computed without materializing the set.
Integer star_structure_count(std::size_t leaves);

/// All structures on P_n by repeated edge subdivision from all-ones bases.
std::vector<ArithStructure> path_structures(std::size_t n);

/// All structures on C_n by repeated edge subdivision; the bases are the
/// all-ones structures and the three structures of the doubled edge.
std::vector<ArithStructure> cycle_structures(std::size_t n);

/// All structures on W_3 = K_4, pulled back through the clique-star map from
/// the star structures with hub d = 1 (leaf d -> d - 1).
std::vector<ArithStructure> wheel3_structures();

/// Certified-complete enumeration for path (n <= 10), cycle (3 <= n <= 10),
/// star (n <= 6) and wheel with n = 3. Anything else: UnsupportedFamily.
StructureSet enumerate_certified(Family family, std::size_t n);

/// Depth-first search over r with entries in [1, r_cap]. A vertex relation is
/// checked as soon as its closed neighborhood is assigned, and the value of the
/// vertex completing a neighborhood is stepped through the residue class that
/// relation forces. Result is marked incomplete. Throws ReducibleMatrix.
StructureSet enumerate_bounded(const Graph& graph, std::int64_t r_cap, unsigned threads = 0);
StructureSet enumerate_bounded(const IntMatrix& adjacency, std::int64_t r_cap, unsigned threads = 0);

/// Number of structures by count of unit entries in r.
std::map<std::size_t, std::size_t> r1_histogram(const StructureSet& set);

}  // namespace arith
