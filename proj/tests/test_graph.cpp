#include <gtest/gtest.h>

#include "arith/error.hpp"
#include "arith/graph.hpp"

using namespace arith;

namespace {

IntMatrix two_triangles() {
    IntMatrix m(6);
    for (std::size_t b : {0u, 3u})
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) m(b + i, b + j) = 1;
    return m;
}

}  // namespace

TEST(MakeGraph, WheelThreeIsK4) {
    EXPECT_EQ(make_graph(Family::Wheel, 3).adjacency, make_graph(Family::Complete, 4).adjacency);
}

TEST(MakeGraph, CycleThree) {
    EXPECT_EQ(make_graph(Family::Cycle, 3).adjacency, (IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST(MakeGraph, WheelDegrees) {
    for (std::size_t n = 3; n <= 9; ++n) {
        const Graph w = make_graph(Family::Wheel, n);
        EXPECT_EQ(w.order(), n + 1);
        const IntVector deg = degree_vector(w.adjacency);
        EXPECT_EQ(deg[0], static_cast<long>(n));
        Integer total = deg[0];
        for (std::size_t i = 1; i <= n; ++i) {
            EXPECT_EQ(deg[i], 3);
            total += deg[i];
        }
        EXPECT_EQ(total, static_cast<long>(4 * n));
        EXPECT_EQ(w.labels.front(), "v0");
        EXPECT_EQ(w.spec(), "wheel:" + std::to_string(n));
    }
}

TEST(MakeGraph, RejectsSmallCyclesAndWheels) {
    EXPECT_THROW(make_graph(Family::Cycle, 2), Error);
    EXPECT_THROW(make_graph(Family::Wheel, 2), Error);
    EXPECT_THROW(make_graph(Family::Path, 0), Error);
}

TEST(LaplacianLike, Examples) {
    const IntMatrix c3 = make_graph(Family::Cycle, 3).adjacency;
    EXPECT_EQ(laplacian_like(c3, make_vector({2, 2, 2})), (IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    const IntVector k = laplacian_like(c3, make_vector({5, 2, 1})) * make_vector({1, 2, 3});
    EXPECT_EQ(k, make_vector({0, 0, 0}));
    const IntMatrix w3 = make_graph(Family::Wheel, 3).adjacency;
    EXPECT_EQ(laplacian_like(w3, make_vector({3, 3, 3, 3})),
              (IntMatrix{{3, -1, -1, -1}, {-1, 3, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}}));
    EXPECT_THROW(laplacian_like(c3, make_vector({1, 1})), Error);
}

TEST(LaplacianLike, DegreeVectorAnnihilatesOnes) {
    for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Wheel})
        for (std::size_t n = 3; n <= 7; ++n) {
            const Graph g = make_graph(f, n);
            const IntVector v = laplacian_like(g.adjacency, degree_vector(g.adjacency)) * ones(g.order());
            for (const auto& x : v) EXPECT_EQ(x, 0);
            EXPECT_TRUE(is_irreducible(g.adjacency));
        }
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible(make_graph(Family::Wheel, 6).adjacency));
    EXPECT_FALSE(is_irreducible(two_triangles()));
    EXPECT_FALSE(is_irreducible(IntMatrix{{0, 1}, {0, 0}}));
    EXPECT_TRUE(is_irreducible(IntMatrix{{0, 1}, {1, 0}}));
    // A directed 3-cycle is strongly connected.
    EXPECT_TRUE(is_irreducible(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
}

TEST(GeneralizedClass, Examples) {
    EXPECT_TRUE(in_generalized_class(make_graph(Family::Wheel, 3).adjacency));
    EXPECT_FALSE(in_generalized_class(two_triangles()));
    EXPECT_FALSE(in_generalized_class(IntMatrix{{0}}));
    try {
        in_generalized_class(IntMatrix{{1, 1}, {1, 0}});
        FAIL() << "expected InvalidGeneralizedGraph";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidGeneralizedGraph);
    }
    EXPECT_THROW(in_generalized_class(IntMatrix{{0, -1}, {1, 0}}), Error);
    // Multigraph entries are allowed.
    EXPECT_TRUE(in_generalized_class(IntMatrix{{0, 2}, {2, 0}}));
}

TEST(CustomGraph, Validation) {
    EXPECT_NO_THROW(make_custom_graph(IntMatrix{{0, 1}, {1, 0}}));
    try {
        make_custom_graph(IntMatrix{{0, 1}, {0, 0}});
        FAIL() << "expected InvalidMatrix";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidMatrix);
    }
    EXPECT_NO_THROW(make_custom_graph(IntMatrix{{0, 1}, {0, 0}}, false));
}

TEST(Family, RoundTrip) {
    for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Wheel})
        EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_FALSE(parse_family("torus").has_value());
}
