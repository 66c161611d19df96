#pragma once

#include <span>
#include <string>

#include "arith/structure.hpp"

namespace arith {

enum class WheelCase { AllOnes, Case1, Case2, Case3, Unclassified };

std::string to_string(WheelCase c);

/// Places a structure on W_n (hub d0, rim d1..dn) in the trichotomy:
///   Case1: d0 > n and some rim d_i < 3,
///   Case2: d0 < n and some rim d_i > 3,
///   Case3: d0 = n with rim entries d_i < 3 and d_j > 3.
/// Unclassified means none applies. Throws NotAStructure when d does not
/// complete to a structure on W_n.
WheelCase classify_wheel_structure(std::size_t n, std::span<const Integer> d);

/// True when every vertex with d = 1 has only neighbors with d > 1.
bool check_unit_d_neighbors(const Graph& graph, std::span<const Integer> d);

}  // namespace arith
