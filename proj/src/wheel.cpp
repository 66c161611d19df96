#include "arith/wheel.hpp"

#include <algorithm>

#include "arith/error.hpp"

namespace arith {

std::string to_string(WheelCase c) {
    switch (c) {
        case WheelCase::AllOnes: return "all-ones";
        case WheelCase::Case1: return "case1";
        case WheelCase::Case2: return "case2";
        case WheelCase::Case3: return "case3";
        case WheelCase::Unclassified: return "unclassified";
    }
    return "unclassified";
}

WheelCase classify_wheel_structure(std::size_t n, std::span<const Integer> d) {
    const Graph w = make_graph(Family::Wheel, n);
    if (d.size() != w.order())
        throw Error(ErrorKind::DimensionMismatch,
                    "wheel:" + std::to_string(n) + " needs " + std::to_string(w.order()) + " entries");
    const auto r = r_from_d(w.adjacency, d);
    if (!r) throw Error(ErrorKind::NotAStructure, "d = " + to_string(d) + " is not a d-structure on wheel:" + std::to_string(n));
    if (std::all_of(r->begin(), r->end(), [](const Integer& x) { return x == 1; })) return WheelCase::AllOnes;

    const Integer nn(static_cast<unsigned long>(n));
    const auto rim = d.subspan(1);
    const bool low = std::any_of(rim.begin(), rim.end(), [](const Integer& x) { return x < 3; });
    const bool high = std::any_of(rim.begin(), rim.end(), [](const Integer& x) { return x > 3; });
    // A rim index cannot be both below and above 3, so i != j holds whenever
    // low and high are both present.
    if (d[0] > nn && low) return WheelCase::Case1;
    if (d[0] < nn && high) return WheelCase::Case2;
    if (d[0] == nn && low && high) return WheelCase::Case3;
    return WheelCase::Unclassified;
}

bool check_unit_d_neighbors(const Graph& graph, std::span<const Integer> d) {
    const std::size_t n = graph.order();
    if (d.size() != n) throw Error(ErrorKind::DimensionMismatch, "d length differs from the graph order");
    for (std::size_t v = 0; v < n; ++v) {
        if (d[v] != 1) continue;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && graph.adjacency(v, u) != 0 && d[u] <= 1) return false;
    }
    return true;
}

}  // namespace arith
