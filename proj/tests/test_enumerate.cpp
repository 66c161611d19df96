#include <gtest/gtest.h>

#include <set>

#include "arith/enumerate.hpp"
#include "arith/error.hpp"
#include "arith/mclass.hpp"
#include "oracles.hpp"

using namespace arith;

namespace {

std::int64_t fib(unsigned n) {
    std::int64_t a = 0, b = 1;
    for (unsigned i = 0; i < n; ++i) {
        const std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

void expect_round_trip(const StructureSet& set) {
    for (const auto& s : set.structures) {
        EXPECT_EQ(d_from_r(set.graph.adjacency, s.r), s.d) << to_string(s.r);
        EXPECT_EQ(r_from_d(set.graph.adjacency, s.d), s.r) << to_string(s.d);
    }
}

void expect_canonical(const StructureSet& set) {
    for (std::size_t i = 0; i + 1 < set.structures.size(); ++i) EXPECT_LT(set.structures[i], set.structures[i + 1]);
}

}  // namespace

TEST(Certified, StarCounts) {
    const std::size_t expected[] = {1, 2, 14, 263, 13462};
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto set = enumerate_certified(Family::Star, n);
        EXPECT_EQ(set.size(), expected[n - 1]);
        EXPECT_EQ(star_structure_count(n), expected[n - 1]);
        EXPECT_TRUE(set.complete);
        EXPECT_FALSE(set.r_cap.has_value());
        expect_canonical(set);
        for (const auto& s : set.structures) EXPECT_TRUE(is_arithmetical(set.graph.adjacency, s.d, s.r));
    }
    EXPECT_EQ(star_structure_count(6), 2104021);
}

TEST(Certified, StarMatchesBruteForce) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto set = enumerate_certified(Family::Star, n);
        // The largest r on three leaves is lcm(2, 3, 6) = 6.
        EXPECT_EQ(set.structures, oracle::brute_force_structures(set.graph.adjacency, 12)) << "star:" << n;
    }
}

TEST(Certified, PathCounts) {
    EXPECT_TRUE(path_structures(1).empty());
    for (unsigned n = 2; n <= 8; ++n) {
        const auto set = enumerate_certified(Family::Path, n);
        EXPECT_EQ(set.size(), oracle::catalan(n - 1)) << "path:" << n;
        expect_round_trip(set);
        expect_canonical(set);
    }
}

TEST(Certified, PathThreeMatchesBruteForce) {
    const auto set = enumerate_certified(Family::Path, 3);
    EXPECT_EQ(set.size(), 2u);
    EXPECT_EQ(set.structures, oracle::brute_force_structures(set.graph.adjacency, 4));
}

TEST(Certified, CycleCountsAndHistogram) {
    for (unsigned n = 3; n <= 8; ++n) {
        const auto set = enumerate_certified(Family::Cycle, n);
        EXPECT_EQ(set.size(), oracle::binomial(2 * n - 1, n - 1)) << "cycle:" << n;
        const auto hist = r1_histogram(set);
        for (unsigned k = 1; k <= n; ++k) EXPECT_EQ(hist.at(k), oracle::binomial(2 * n - k - 1, n - k)) << n << " " << k;
        EXPECT_EQ(hist.count(0), 0u);
        expect_round_trip(set);
    }
}

TEST(Certified, SmallCyclesMatchBruteForce) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto set = enumerate_certified(Family::Cycle, n);
        EXPECT_EQ(set.structures, oracle::brute_force_structures(set.graph.adjacency, fib(static_cast<unsigned>(n + 1))))
            << "cycle:" << n;
    }
}

TEST(Certified, CycleThreeTable) {
    const auto set = enumerate_certified(Family::Cycle, 3);
    EXPECT_TRUE(set.contains({make_vector({2, 2, 2}), ones(3)}));
    EXPECT_TRUE(set.contains({make_vector({3, 3, 1}), make_vector({1, 1, 2})}));
    EXPECT_TRUE(set.contains({make_vector({5, 2, 1}), make_vector({1, 2, 3})}));
}

TEST(Certified, WheelThree) {
    const auto set = enumerate_certified(Family::Wheel, 3);
    EXPECT_EQ(set.size(), 215u);
    EXPECT_EQ(r1_histogram(set).at(4), 1u);
    expect_round_trip(set);
    // W3 = K4: closed under every vertex permutation.
    std::vector<std::size_t> perm{0, 1, 2, 3};
    while (std::next_permutation(perm.begin(), perm.end()))
        for (const auto& s : set.structures) {
            ArithStructure t;
            for (auto i : perm) {
                t.d.push_back(s.d[i]);
                t.r.push_back(s.r[i]);
            }
            ASSERT_TRUE(set.contains(t));
        }
}

TEST(Certified, Unsupported) {
    for (auto [f, n] : {std::pair{Family::Wheel, std::size_t{4}}, std::pair{Family::Complete, std::size_t{4}}}) {
        try {
            enumerate_certified(f, n);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::UnsupportedFamily);
        }
    }
    EXPECT_THROW(enumerate_certified(Family::Star, kMaxCertifiedStar + 1), Error);
    EXPECT_THROW(enumerate_certified(Family::Cycle, kMaxCertifiedPathCycle + 1), Error);
}

TEST(Bounded, Examples) {
    const auto c4 = enumerate_bounded(make_graph(Family::Cycle, 4), 8);
    EXPECT_EQ(c4.size(), 35u);
    EXPECT_FALSE(c4.complete);
    EXPECT_EQ(c4.r_cap, 8);

    const auto w3 = enumerate_bounded(make_graph(Family::Wheel, 3), 64);
    EXPECT_EQ(w3.structures, enumerate_certified(Family::Wheel, 3).structures);

    IntMatrix two(6);
    for (std::size_t b : {0u, 3u})
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) two(b + i, b + j) = 1;
    try {
        enumerate_bounded(two, 8);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ReducibleMatrix);
    }
}

TEST(Bounded, AgreesWithCertifiedAtFibonacciCap) {
    for (unsigned n = 3; n <= 6; ++n) {
        EXPECT_EQ(enumerate_bounded(make_graph(Family::Cycle, n), fib(n + 1)).structures,
                  enumerate_certified(Family::Cycle, n).structures)
            << "cycle:" << n;
        EXPECT_EQ(enumerate_bounded(make_graph(Family::Path, n), fib(n + 1)).structures,
                  enumerate_certified(Family::Path, n).structures)
            << "path:" << n;
    }
}

TEST(Bounded, AgreesWithBruteForce) {
    const std::vector<std::pair<Graph, std::int64_t>> cases{{make_graph(Family::Wheel, 4), 7},
                                                            {make_graph(Family::Complete, 3), 12},
                                                            {make_graph(Family::Star, 3), 12},
                                                            {make_graph(Family::Path, 4), 9}};
    for (const auto& [g, cap] : cases)
        EXPECT_EQ(enumerate_bounded(g, cap).structures, oracle::brute_force_structures(g.adjacency, cap)) << g.spec();
}

TEST(Bounded, MultigraphAndDirectedSupport) {
    // Doubled edge: d1 d2 = 4.
    const IntMatrix two{{0, 2}, {2, 0}};
    const auto set = enumerate_bounded(two, 16);
    EXPECT_EQ(set.size(), 3u);
    EXPECT_EQ(set.structures, oracle::brute_force_structures(two, 16));

    // Directed 3-cycle: irreducible, non-symmetric.
    const IntMatrix dir{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    EXPECT_EQ(enumerate_bounded(dir, 10).structures, oracle::brute_force_structures(dir, 10));

    const IntMatrix weighted{{0, 2, 1}, {1, 0, 3}, {2, 1, 0}};
    EXPECT_EQ(enumerate_bounded(weighted, 14).structures, oracle::brute_force_structures(weighted, 14));
}

TEST(Bounded, ThreadCountDoesNotChangeResult) {
    const Graph w5 = make_graph(Family::Wheel, 5);
    const auto one = enumerate_bounded(w5, 16, 1);
    EXPECT_EQ(one.structures, enumerate_bounded(w5, 16, 3).structures);
    EXPECT_EQ(one.structures, enumerate_bounded(w5, 16, 7).structures);
}

TEST(Bounded, EveryStructureIsAlmostNonsingularSingular) {
    for (std::size_t n = 4; n <= 5; ++n) {
        const auto set = enumerate_bounded(make_graph(Family::Wheel, n), 12);
        for (const auto& s : set.structures) {
            const auto c = classify(laplacian_like(set.graph.adjacency, s.d));
            EXPECT_TRUE(c.is_almost_nonsingular_m);
            EXPECT_EQ(c.det, 0);
        }
    }
}

TEST(Histogram, PathThree) {
    const auto h = r1_histogram(enumerate_certified(Family::Path, 3));
    std::size_t total = 0;
    for (const auto& [k, c] : h) total += c;
    EXPECT_EQ(total, 2u);
}
