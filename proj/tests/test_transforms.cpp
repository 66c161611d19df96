#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "arith/enumerate.hpp"
#include "arith/error.hpp"
#include "arith/exact_linalg.hpp"
#include "arith/transforms.hpp"
#include "oracles.hpp"

using namespace arith;

namespace {

IntMatrix lap(Family f, std::size_t n, std::initializer_list<long> d) {
    return laplacian_like(make_graph(f, n).adjacency, make_vector(d));
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
    try {
        f();
        FAIL() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

bool annihilates(const IntMatrix& m, std::span<const Integer> v) {
    const IntVector mv = m * v;
    return std::all_of(mv.begin(), mv.end(), [](const Integer& x) { return x == 0; });
}

// Star with the hub moved to the last index.
IntMatrix star_hub_last(std::size_t leaves) {
    std::vector<std::size_t> perm(leaves + 1);
    std::iota(perm.begin(), perm.end(), 1);
    perm.back() = 0;
    return make_graph(Family::Star, leaves).adjacency.permuted(perm);
}

}  // namespace

TEST(CliqueStar, WheelThreeFullCliqueGivesStar) {
    const Graph w3 = make_graph(Family::Wheel, 3);
    const std::vector<std::size_t> all{0, 1, 2, 3};
    const auto res = clique_star(w3, all, ArithStructure{make_vector({3, 3, 3, 3}), ones(4)});
    EXPECT_EQ(res.graph.adjacency, star_hub_last(4));
    ASSERT_TRUE(res.structure.has_value());
    EXPECT_EQ(res.structure->d, make_vector({4, 4, 4, 4, 1}));
    EXPECT_EQ(res.structure->r, make_vector({1, 1, 1, 1, 4}));

    const auto res2 = clique_star(w3, all, ArithStructure{make_vector({5, 5, 2, 2}), make_vector({1, 1, 2, 2})});
    EXPECT_EQ(res2.structure->d, make_vector({6, 6, 3, 3, 1}));
    EXPECT_EQ(res2.structure->r, make_vector({1, 1, 2, 2, 6}));
}

TEST(CliqueStar, InjectiveOnWheelThree) {
    const Graph w3 = make_graph(Family::Wheel, 3);
    const std::vector<std::size_t> all{0, 1, 2, 3};
    std::set<ArithStructure> images;
    for (const auto& s : enumerate_certified(Family::Wheel, 3).structures) {
        const auto res = clique_star(w3, all, s);
        EXPECT_TRUE(is_arithmetical(res.graph.adjacency, res.structure->d, res.structure->r));
        images.insert(*res.structure);
    }
    EXPECT_EQ(images.size(), 215u);
}

TEST(CliqueStar, PartialCliquesOnLargerGraphs) {
    const Graph w5 = make_graph(Family::Wheel, 5);
    const std::vector<std::size_t> tri{0, 1, 2};
    for (const auto& s : enumerate_bounded(w5, 8).structures) {
        const auto res = clique_star(w5, tri, s);
        EXPECT_TRUE(is_arithmetical(res.graph.adjacency, res.structure->d, res.structure->r));
    }
}

TEST(CliqueStar, Errors) {
    const Graph c4 = make_graph(Family::Cycle, 4);
    const std::vector<std::size_t> opposite{0, 2};
    expect_error(ErrorKind::NotAClique, [&] { clique_star(c4, opposite); });
    expect_error(ErrorKind::NotAClique, [&] { clique_star(c4, std::vector<std::size_t>{}); });
    expect_error(ErrorKind::NotAClique, [&] { clique_star(c4, std::vector<std::size_t>{0, 9}); });
    const std::vector<std::size_t> edge{0, 1};
    expect_error(ErrorKind::NotAStructure,
                 [&] { clique_star(c4, edge, ArithStructure{make_vector({2, 2, 2, 3}), ones(4)}); });
}

TEST(Blowup, Examples) {
    const IntMatrix c3 = lap(Family::Cycle, 3, {2, 2, 2});
    const auto b = blowup_mq(c3, ones(3), ones(3));
    EXPECT_EQ(b.x, 3);
    EXPECT_TRUE(annihilates(b.mq, make_vector({1, 1, 1, 3})));
    EXPECT_EQ(det(b.mq), 0);

    const IntMatrix k4 = lap(Family::Wheel, 3, {3, 3, 3, 3});
    const auto b2 = blowup_mq(k4, make_vector({1, 0, 0, 0}), ones(4));
    EXPECT_EQ(b2.x, 1);
    EXPECT_EQ(b2.mq, (IntMatrix{{4, -1, -1, -1, -1},
                                {-1, 3, -1, -1, 0},
                                {-1, -1, 3, -1, 0},
                                {-1, -1, -1, 3, 0},
                                {-1, 0, 0, 0, 1}}));
    EXPECT_TRUE(annihilates(b2.mq, make_vector({1, 1, 1, 1, 1})));

    expect_error(ErrorKind::ZeroX, [&] { blowup_mq(c3, make_vector({1, -1, 0}), ones(3)); });
    expect_error(ErrorKind::KernelMismatch, [&] { blowup_mq(c3, ones(3), make_vector({1, 2, 3})); });
}

TEST(Blowup, MinusVariantResidue) {
    // The sign-flipped layout leaves 2x in the last coordinate.
    const IntMatrix c3 = lap(Family::Cycle, 3, {2, 2, 2});
    const auto b = blowup_mq(c3, ones(3), ones(3));
    EXPECT_EQ(b.mq_minus * make_vector({1, 1, 1, 3}), make_vector({0, 0, 0, 6}));
}

TEST(Blowup, ConjugationOnRandomInstances) {
    oracle::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        const IntMatrix m = oracle::random_z_matrix(rng, n);
        const IntVector q = oracle::random_vector(rng, n, -3, 3);
        EXPECT_TRUE(pq_conjugation_check(m, q));
        EXPECT_EQ(det(blowup_matrix(m, q)), det(m));
    }
}

TEST(GeneralizedBlowupM, Examples) {
    const IntMatrix c3 = lap(Family::Cycle, 3, {2, 2, 2});
    const auto a = generalized_blowup_m(c3, make_vector({2, 2, 2}), ones(3), ones(3), ones(3));
    EXPECT_EQ(a.structure.d, make_vector({1, 3, 3, 3}));
    EXPECT_EQ(a.structure.r, make_vector({3, 1, 1, 1}));
    EXPECT_TRUE(annihilates(a.matrix, a.structure.r));

    const auto b = generalized_blowup_m(c3, make_vector({2, 2, 2}), ones(3), make_vector({1, 2, 3}), make_vector({2, 1, 1}));
    EXPECT_EQ(b.structure.r[0], 4);
    EXPECT_EQ(b.structure.d, make_vector({1, 4, 4, 5}));
    EXPECT_TRUE(annihilates(b.matrix, b.structure.r));

    expect_error(ErrorKind::NonPositivePQ,
                 [&] { generalized_blowup_m(c3, make_vector({2, 2, 2}), ones(3), make_vector({0, 1, 1}), ones(3)); });
}

TEST(GeneralizedBlowupM, EqualsMqWhenPEqualsQ) {
    oracle::Rng rng(32);
    for (const auto& s : enumerate_certified(Family::Cycle, 4).structures) {
        const IntMatrix m = laplacian_like(make_graph(Family::Cycle, 4).adjacency, s.d);
        const IntVector q = oracle::random_vector(rng, 4, 1, 3);
        const auto g = generalized_blowup_m(m, s.d, s.r, q, q);
        // B lists the new vertex first, M_q last.
        const std::vector<std::size_t> last_first{4, 0, 1, 2, 3};
        EXPECT_EQ(g.matrix, blowup_matrix(m, q).permuted(last_first));
    }
}

TEST(GeneralizedBlowupA, Examples) {
    const IntMatrix c3 = make_graph(Family::Cycle, 3).adjacency;
    const IntVector d = make_vector({2, 2, 2});

    const auto unit = generalized_blowup_a(c3, d, ones(3), ones(3), ones(3));
    EXPECT_FALSE(unit.raw);
    EXPECT_EQ(unit.structure.d, make_vector({1, 3, 3, 3}));
    EXPECT_EQ(unit.structure.r, make_vector({3, 1, 1, 1}));
    // The rim edges cancel: the result is the star with three leaves.
    EXPECT_EQ(unit.adjacency, make_graph(Family::Star, 3).adjacency);

    const auto twos = generalized_blowup_a(c3, d, ones(3), make_vector({2, 2, 2}), make_vector({2, 2, 2}));
    EXPECT_EQ(twos.structure.d, make_vector({2, 4, 4, 4}));
    EXPECT_EQ(twos.structure.r, make_vector({3, 1, 1, 1}));
    EXPECT_TRUE(annihilates(laplacian_like(twos.adjacency, twos.structure.d), twos.structure.r));

    const auto raw = generalized_blowup_a(c3, d, ones(3), ones(3), make_vector({2, 3, 2}));
    EXPECT_TRUE(raw.raw);
    EXPECT_TRUE(annihilates(laplacian_like(raw.adjacency, raw.structure.d), raw.structure.r));

    // g divides every q_j, so odd p with even q still assembles.
    const auto odd = generalized_blowup_a(c3, d, ones(3), make_vector({1, 3, 1}), make_vector({2, 2, 2}));
    EXPECT_EQ(odd.structure.d, make_vector({2, 3, 5, 3}));
    EXPECT_EQ(odd.structure.r, make_vector({3, 1, 1, 1}));
    expect_error(ErrorKind::NonPositivePQ,
                 [&] { generalized_blowup_a(c3, d, ones(3), make_vector({1, -1, 1}), ones(3)); });
    expect_error(ErrorKind::KernelMismatch,
                 [&] { generalized_blowup_a(c3, make_vector({2, 2, 3}), ones(3), ones(3), ones(3)); });
}

TEST(GeneralizedBlowupA, KernelIdentityOnRandomInputs) {
    oracle::Rng rng(33);
    const Graph c5 = make_graph(Family::Cycle, 5);
    const auto set = enumerate_certified(Family::Cycle, 5);
    for (int t = 0; t < 60; ++t) {
        const auto& s = set.structures[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(set.size()) - 1))];
        const long g = rng.uniform(1, 3);
        IntVector q = oracle::random_vector(rng, 5, 1, 3);
        for (auto& x : q) x *= g;
        IntVector p = oracle::random_vector(rng, 5, 1, 3);
        for (auto& x : p) x *= g;
        const auto res = generalized_blowup_a(c5.adjacency, s.d, s.r, p, q);
        EXPECT_TRUE(annihilates(laplacian_like(res.adjacency, res.structure.d), res.structure.r));
    }
}

TEST(CycleToWheel, DivisorTable) {
    const auto a = cycle_to_wheel_divisor(make_vector({2, 2, 2}), ones(3));
    EXPECT_EQ(a.d, make_vector({1, 5, 5, 5}));
    EXPECT_EQ(a.r, make_vector({3, 1, 1, 1}));
    const auto b = cycle_to_wheel_divisor(make_vector({3, 3, 1}), make_vector({1, 1, 2}));
    EXPECT_EQ(b.d, make_vector({1, 7, 7, 3}));
    EXPECT_EQ(b.r, make_vector({4, 1, 1, 2}));
    const auto c = cycle_to_wheel_divisor(make_vector({5, 2, 1}), make_vector({1, 2, 3}));
    EXPECT_EQ(c.d, make_vector({1, 11, 5, 3}));
    EXPECT_EQ(c.r, make_vector({6, 1, 2, 3}));

    expect_error(ErrorKind::DivisibilityViolation,
                 [&] { cycle_to_wheel_divisor(make_vector({6, 2, 2, 1}), make_vector({1, 2, 3, 4})); });
    expect_error(ErrorKind::NotAStructure, [&] { cycle_to_wheel_divisor(make_vector({2, 2, 3}), ones(3)); });
}

TEST(CycleToWheel, DivisorOutputsVerifyOnCycleSets) {
    for (std::size_t n = 3; n <= 6; ++n) {
        const Graph w = make_graph(Family::Wheel, n);
        for (const auto& s : enumerate_certified(Family::Cycle, n).structures) {
            const Integer sum = sum_of(s.r);
            if (!std::all_of(s.r.begin(), s.r.end(), [&](const Integer& x) { return mpz_divisible_p(sum.get_mpz_t(), x.get_mpz_t()); }))
                continue;
            const auto out = cycle_to_wheel_divisor(s.d, s.r);
            EXPECT_TRUE(is_arithmetical(w.adjacency, out.d, out.r));
        }
    }
}

TEST(CycleToWheel, Lcm) {
    const auto a = cycle_to_wheel_lcm(make_vector({1, 3, 2}), 6);
    EXPECT_EQ(a.r, make_vector({6, 1, 3, 2}));
    EXPECT_EQ(a.d, make_vector({1, 11, 3, 5}));

    const auto b = cycle_to_wheel_lcm(ones(3), 1);
    EXPECT_EQ(b.r, ones(4));
    EXPECT_EQ(b.d, make_vector({3, 3, 3, 3}));

    expect_error(ErrorKind::PreconditionViolation, [&] { cycle_to_wheel_lcm(make_vector({1, 2, 3, 4}), 12); });
    expect_error(ErrorKind::PreconditionViolation, [&] { cycle_to_wheel_lcm(make_vector({1, 2, 3, 4}), 10); });
    EXPECT_TRUE(cycle_to_wheel_lcm_hubs(make_vector({1, 2, 3, 4})).empty());
    EXPECT_EQ(cycle_to_wheel_lcm_hubs(make_vector({1, 3, 2})), (std::vector<Integer>{6}));
    EXPECT_EQ(cycle_to_wheel_lcm_hubs(ones(4)), (std::vector<Integer>{1, 2, 4}));
}

TEST(CycleToWheel, Affine) {
    // k | n gives ((n / k, 2 + k, ...), (k, 1, ...)).
    for (std::size_t n = 3; n <= 8; ++n)
        for (long k = 1; k <= static_cast<long>(n); ++k) {
            if (n % static_cast<std::size_t>(k) != 0) continue;
            const IntVector d(n, Integer(2 + k));
            const auto out = cycle_to_wheel_affine(d, ones(n), k);
            IntVector want_d(n + 1, Integer(2 + k)), want_r(n + 1, Integer(1));
            want_d[0] = static_cast<long>(n) / k;
            want_r[0] = k;
            EXPECT_EQ(out.d, want_d);
            EXPECT_EQ(out.r, want_r);
        }
    const auto w4 = cycle_to_wheel_affine(make_vector({4, 4, 4, 4}), ones(4), 2);
    EXPECT_EQ(w4.d, make_vector({2, 4, 4, 4, 4}));
    EXPECT_EQ(w4.r, make_vector({2, 1, 1, 1, 1}));

    expect_error(ErrorKind::DivisibilityViolation, [&] { cycle_to_wheel_affine(make_vector({2, 2, 2}), ones(3), 0); });
    expect_error(ErrorKind::AffineResidueNotConstant,
                 [&] { cycle_to_wheel_affine(make_vector({3, 2, 2}), ones(3), 1); });
    expect_error(ErrorKind::DivisibilityViolation, [&] { cycle_to_wheel_affine(make_vector({4, 4, 4}), ones(3), 2); });
}

TEST(CycleToWheel, AffineDividesThroughGcd) {
    // L(C3, (3, 3, 3)) (2, 2, 2) = 2 * 1 with a = 2 dividing 6.
    const auto out = cycle_to_wheel_affine(make_vector({3, 3, 3}), make_vector({2, 2, 2}), 2);
    EXPECT_EQ(out.r, ones(4));
    EXPECT_EQ(out.d, make_vector({3, 3, 3, 3}));
}

TEST(WheelUnit, Examples) {
    EXPECT_EQ(wheel_unit_structure(3).d, make_vector({1, 5, 5, 5}));
    EXPECT_EQ(wheel_unit_structure(3).r, make_vector({3, 1, 1, 1}));
    EXPECT_EQ(wheel_unit_structure(4).d, make_vector({1, 6, 6, 6, 6}));
    const auto w6 = wheel_unit_structure(6);
    EXPECT_EQ(w6.d[0] * w6.r[0], sum_of(std::span<const Integer>(w6.r).subspan(1)));
    EXPECT_THROW(wheel_unit_structure(2), Error);
}

TEST(WheelExtend, Examples) {
    const auto a = wheel_extend(make_vector({3, 3, 3, 3}), ones(4));
    EXPECT_EQ(a.d, make_vector({6, 5, 3, 5, 1}));
    EXPECT_EQ(a.r, make_vector({1, 1, 1, 1, 3}));
    expect_error(ErrorKind::PreconditionViolation, [&] { wheel_extend(make_vector({1, 5, 5, 5}), make_vector({3, 1, 1, 1})); });
}

TEST(WheelExtend, Chained) {
    ArithStructure s{make_vector({3, 3, 3, 3}), ones(4)};
    std::size_t steps = 0;
    while (steps < 6) {
        const std::size_t n = s.r.size() - 1;
        const Integer &r0 = s.r[0], &r1 = s.r[1], &rn = s.r[n];
        const bool ok = mpz_divisible_p(Integer(r1 + rn).get_mpz_t(), r0.get_mpz_t()) &&
                        mpz_divisible_p(r0.get_mpz_t(), r1.get_mpz_t()) && mpz_divisible_p(r0.get_mpz_t(), rn.get_mpz_t());
        if (!ok) break;
        s = wheel_extend(s.d, s.r);
        EXPECT_TRUE(is_arithmetical(make_graph(Family::Wheel, n + 1).adjacency, s.d, s.r));
        ++steps;
    }
    EXPECT_GE(steps, 1u);
}

TEST(ZnOrbit, Examples) {
    const auto o = zn_orbit(3, make_vector({1, 6, 2, 3}));
    EXPECT_EQ(o, (std::vector<IntVector>{make_vector({1, 6, 2, 3}), make_vector({1, 2, 3, 6}), make_vector({1, 3, 6, 2})}));
    EXPECT_EQ(zn_orbit(5, make_vector({5, 1, 1, 1, 1, 1})).size(), 1u);
    expect_error(ErrorKind::NotAStructure, [&] { zn_orbit(3, make_vector({1, 1, 1, 2})); });
}

TEST(ZnOrbit, GroupActionProperties) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto set = enumerate_bounded(make_graph(Family::Wheel, n), 12);
        for (const auto& s : set.structures) {
            IntVector v = s.r;
            for (std::size_t i = 0; i < n; ++i) v = zn_rotate(v, 1);
            EXPECT_EQ(v, s.r);
            const auto orbit = zn_orbit(n, s.r);
            EXPECT_EQ(n % orbit.size(), 0u);
            for (const auto& x : orbit) EXPECT_TRUE(d_from_r(set.graph.adjacency, x).has_value());
        }
    }
}

TEST(ZnOrbit, OrbitsPartitionWheelThree) {
    const auto set = enumerate_certified(Family::Wheel, 3);
    std::map<IntVector, std::set<IntVector>> orbit_of;
    for (const auto& s : set.structures) {
        const auto o = zn_orbit(3, s.r);
        orbit_of[s.r] = std::set<IntVector>(o.begin(), o.end());
    }
    for (const auto& [r, o] : orbit_of)
        for (const auto& x : o) EXPECT_EQ(orbit_of.at(x), o);
}
