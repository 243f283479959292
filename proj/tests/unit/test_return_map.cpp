// SPDX-License-Identifier: MIT
#include <random>

#include <gtest/gtest.h>

#include "lattice_rotor/return_map.hpp"
#include "lattice_rotor/statistics.hpp"

using namespace lattice_rotor;

namespace {

const RotationParameter kTenth{1, 10};

std::vector<LatticePoint> strided(const std::vector<LatticePoint>& pts, std::size_t cap) {
    if (pts.size() <= cap) return pts;
    std::vector<LatticePoint> out;
    const std::size_t stride = pts.size() / cap;
    for (std::size_t i = 0; i < pts.size() && out.size() < cap; i += stride) out.push_back(pts[i]);
    return out;
}

// Phi(z) = z and some F^k(z), 0 <= k < tau, lies on Fix G or Fix H.
bool symmetric_fixed_direct(const LatticePoint& z, const RotationParameter& lam) {
    const ReturnStep r = return_map_direct(z, lam);
    if (r.truncated || r.image != z) return false;
    LatticePoint u = z;
    for (Int k = 0; k < r.tau; ++k) {
        if (in_fix_G(u) || in_fix_H(u, lam)) return true;
        u = apply_F(u, lam);
    }
    return false;
}

}  // namespace

TEST(TransitionSets, Examples) {
    EXPECT_FALSE(in_Lambda({3, 3}, kTenth));
    EXPECT_EQ(apply_F_power({9, 1}, kTenth, 4), (LatticePoint{10, 0}));
    EXPECT_TRUE(in_Lambda({9, 1}, kTenth));
    // Box (2, 2) centre, far from every integer point in scaled units.
    EXPECT_FALSE(in_Sigma({250, 250}, {1, 100}));
}

TEST(TransitionSets, SigmaIsInsideLambda) {
    for (Int x = -60; x <= 60; ++x) {
        for (Int y = -60; y <= 60; ++y) {
            if (in_Sigma({x, y}, kTenth)) ASSERT_TRUE(in_Lambda({x, y}, kTenth));
        }
    }
}

TEST(StripMap, AcceleratedEqualsStepwise) {
    const RotationParameter lam{1, 24};
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> coord(-240, 240);
    int checked = 0;
    while (checked < 10'000) {
        const LatticePoint z{coord(rng), coord(rng)};
        if (z == LatticePoint{0, 0}) continue;
        for (Direction dir : {Direction::forward, Direction::backward}) {
            const StripHop a = strip_map_Psi(z, lam, dir);
            const StripHop b = strip_map_Psi_stepwise(z, lam, dir);
            ASSERT_EQ(a.vertex, b.vertex) << z.x << "," << z.y;
            ASSERT_EQ(a.transit, b.transit) << z.x << "," << z.y;
        }
        ++checked;
    }
    EXPECT_THROW(strip_map_Psi({0, 0}, lam), std::invalid_argument);
}

TEST(StripMap, LinearMotionInsideABox) {
    const RotationParameter lam{1, 24};
    for (Int x = 1; x <= 200; x += 3) {
        for (Int y = -200; y <= 200; y += 7) {
            const LatticePoint z{x, y};
            if (in_Lambda(z, lam)) continue;
            const StripHop h = strip_map_Psi(z, lam);
            ASSERT_GE(h.transit, 1);
            ASSERT_EQ(h.vertex, z + scale(box_of(z, lam).w_value(), h.transit));
            ASSERT_TRUE(in_Lambda(h.vertex, lam));
        }
    }
}

// On Lambda the backward strip map undoes the forward one.
TEST(StripMap, BackwardInvertsForwardOnLambda) {
    const RotationParameter lam{1, 24};
    int checked = 0;
    for (Int x = -150; x <= 150; ++x) {
        for (Int y = -150; y <= 150; y += 5) {
            const LatticePoint z{x, y};
            if (z == LatticePoint{0, 0} || !in_Lambda(z, lam)) continue;
            const StripHop fwd = strip_map_Psi(z, lam);
            const StripHop back = strip_map_Psi(fwd.vertex, lam, Direction::backward);
            ASSERT_EQ(back.vertex, z) << x << "," << y;
            ASSERT_EQ(back.transit, fwd.transit);
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(ReturnMap, SquareClassFixedPoint) {
    const ReturnOrbit o = return_map_Phi({3, 3}, kTenth);
    EXPECT_EQ(o.result, (LatticePoint{3, 3}));
    EXPECT_EQ(o.tau, 25);
    EXPECT_TRUE(o.is_fixed);
    const ReturnStep d = return_map_direct({3, 3}, kTenth);
    EXPECT_EQ(d.image, (LatticePoint{3, 3}));
    EXPECT_EQ(d.tau, 25);
}

TEST(ReturnMap, AcceleratedEqualsDirect) {
    const RotationParameter lam{1, 200};
    for (Int e : {1, 2, 4, 5, 9}) {
        const RegularDomain dom = regular_domain_Xe(e, lam);
        const std::vector<LatticePoint> seeds = strided(dom.points(), 1000);
        ASSERT_FALSE(seeds.empty()) << e;
        for (const LatticePoint& z : seeds) {
            const ReturnOrbit o = return_map_Phi(z, lam, &dom.cls);
            const ReturnStep d = return_map_direct(z, lam);
            ASSERT_EQ(o.result, d.image) << "e=" << e << " z=" << z.x << "," << z.y;
            ASSERT_EQ(o.tau, d.tau) << "e=" << e;
            ASSERT_TRUE(o.regular) << o.diagnostic;
            ASSERT_EQ(static_cast<Int>(o.vertices.size()), 2 * dom.cls.k - 1) << "e=" << e;
            ASSERT_EQ(o.sigma.size(), o.vertices.size() + 1);
        }
    }
}

TEST(ReturnMap, CodeTestEqualsDirectTest) {
    const RotationParameter lam{1, 1000};
    for (Int e : {1, 2, 4, 5, 9, 10}) {
        const RegularDomain dom = regular_domain_Xe(e, lam);
        Int symmetric = 0;
        for (const LatticePoint& z : strided(dom.points(), 1500)) {
            const ReturnOrbit o = return_map_Phi(z, lam, &dom.cls);
            ASSERT_TRUE(o.regular);
            const bool direct = symmetric_fixed_direct(z, lam);
            ASSERT_EQ(symmetric_fixed_point_test(o, dom.cls), direct) << "e=" << e << " " << z.x << "," << z.y;
            ASSERT_EQ(o.is_symmetric_fixed, direct);
            symmetric += direct;
        }
        EXPECT_GT(symmetric, 0) << e;
    }
}

TEST(ReturnMap, EveryPointOfTheSquareClassIsSymmetricFixed) {
    const RotationParameter lam{1, 50};
    const RegularDomain dom = regular_domain_Xe(0, lam);
    for (const LatticePoint& z : dom.points()) {
        const ReturnOrbit o = return_map_Phi(z, lam, &dom.cls);
        ASSERT_TRUE(o.is_fixed);
        ASSERT_TRUE(symmetric_fixed_point_test(o, dom.cls));
    }
}

TEST(ReturnMap, NonFixedOrbitFailsTheCodeTest) {
    const RotationParameter lam{1, 1000};
    const RegularDomain dom = regular_domain_Xe(9, lam);
    int seen = 0;
    for (const LatticePoint& z : dom.points()) {
        const ReturnOrbit o = return_map_Phi(z, lam, &dom.cls);
        if (o.result == z) continue;
        EXPECT_FALSE(symmetric_fixed_point_test(o, dom.cls));
        if (++seen == 50) break;
    }
    EXPECT_EQ(seen, 50);
}

// Phi^-1 = G^e Phi G^e wherever both sides stay in X^e.
TEST(ReturnMap, ReversibleUnderGe) {
    const RotationParameter lam{1, 500};
    for (Int e : {1, 2, 4, 5, 8, 9, 10}) {
        const RegularDomain dom = regular_domain_Xe(e, lam);
        Int checked = 0;
        for (const LatticePoint& z : dom.points()) {
            const LatticePoint fz = return_map_Phi(z, lam, &dom.cls).result;
            if (!dom.contains(fz)) continue;
            const LatticePoint g = reversor_Ge(fz, dom.W);
            ASSERT_TRUE(dom.contains(g));
            const LatticePoint back = reversor_Ge(return_map_Phi(g, lam, &dom.cls).result, dom.W);
            ASSERT_EQ(back, z) << "e=" << e << " z=" << z.x << "," << z.y;
            ++checked;
        }
        EXPECT_GT(checked, 0) << e;
    }
}

// In the square class every orbit is a symmetric fixed point of Phi, but
// orbits passing within 3 lambda of the origin or 5 lambda of (1, 0) meet
// Sigma and count as irregular. Those are the levels at both ends.
TEST(RegularDomain, SquareClassIrregularOnlyThroughSigma) {
    const RotationParameter lam{1, 20};
    const RegularDomain dom = regular_domain_Xe(0, lam);
    EXPECT_EQ(dom.level_lo, 1);
    EXPECT_EQ(dom.level_hi, 19);
    for (Int s = dom.level_lo; s <= dom.level_hi; ++s) {
        for (Int d : {-1, 0}) {
            if ((s + d) % 2 != 0) continue;
            const LatticePoint z{(s + d) / 2, (s - d) / 2};
            const ReturnOrbit o = return_map_Phi(z, lam, &dom.cls);
            const OrbitRecord rec = orbit_period(z, lam);
            EXPECT_EQ(rec.period, 4 * s + 1);
            EXPECT_TRUE(rec.symmetric);
            if (s > 1) EXPECT_TRUE(rec.minimal()) << s;
            const bool inside = dom.s_min <= s && s <= dom.s_max;
            EXPECT_EQ(o.regular, inside) << s;
            if (!o.regular && s > 1) EXPECT_EQ(o.irregularity, Irregularity::hits_Sigma) << s;
        }
    }
    EXPECT_EQ(dom.s_min, 5);
    EXPECT_EQ(dom.s_max, 14);
    EXPECT_EQ(dom.irregular_levels, 9);
    // (0, 1) never enters X: its 5-cycle has no point strictly closer to Fix G
    // than its preimage.
    EXPECT_EQ(return_map_Phi({0, 1}, lam, &dom.cls).irregularity, Irregularity::seed_outside_X);
}

TEST(RegularDomain, IntervalRatioGrowsAsLambdaShrinks) {
    // At lambda = 1/100 the class e = 9 has no regular level at all.
    EXPECT_THROW(regular_domain_Xe(9, {1, 100}), std::runtime_error);
    const RegularDomain mid = regular_domain_Xe(9, {1, 400});
    const RegularDomain fine = regular_domain_Xe(9, {1, 1600});
    EXPECT_GT(mid.interval_ratio(), make_q(0));
    EXPECT_GT(fine.interval_ratio(), mid.interval_ratio());
    EXPECT_LT(fine.interval_ratio(), make_q(1));
}

// Irregular points sit within a bounded number of lambda of the class ends.
TEST(RegularDomain, IrregularPointsHugTheBoundary) {
    for (Int e : {2, 5, 9, 10}) {
        for (Int q : {500, 1000, 2000}) {
            const RegularDomain dom = regular_domain_Xe(e, {1, q});
            const Rational gap_in_lambda = dom.max_irregular_gap * make_q(q);
            EXPECT_LE(gap_in_lambda, make_q(6 * dom.W * dom.W)) << "e=" << e << " q=" << q;
        }
    }
    EXPECT_THROW(regular_domain_Xe(9, {1, 2}), std::runtime_error);
}

TEST(Lattice, EquivarianceAndNegativeControl) {
    {
        const RegularDomain dom = regular_domain_Xe(1, {1, 500});
        const EquivarianceReport rep = check_equivariance(dom, lattice_basis(dom.cls), 400);
        EXPECT_TRUE(rep.verdict);
        EXPECT_GT(rep.pairs_checked, 100);
    }
    const RegularDomain dom = regular_domain_Xe(9, {1, 2000});
    const LatticeBasis good = lattice_basis(dom.cls);
    EXPECT_EQ(good.det(), 175);
    const EquivarianceReport rep = check_equivariance(dom, good, 600);
    EXPECT_TRUE(rep.verdict);
    EXPECT_EQ(rep.failures, 0);
    const Int q = to_int(dom.cls.q, "q");
    const EquivarianceReport bad = check_equivariance(dom, lattice_basis_with_q(dom.cls, q + dom.W), 600);
    EXPECT_FALSE(bad.verdict);
    EXPECT_TRUE(bad.counterexample.has_value());
    EXPECT_THROW(lattice_basis_with_q(dom.cls, q + 1), std::invalid_argument);
}

TEST(Lattice, CodesMatchCongruenceClasses) {
    for (Int e : {1, 2, 4, 5}) {
        const RegularDomain dom = regular_domain_Xe(e, {1, 2000});
        const std::vector<LatticePoint> fd = fundamental_domain(dom);
        ASSERT_EQ(static_cast<Int>(fd.size()), to_int(dom.cls.q, "q")) << e;
        const CodeCensus c = code_census(dom, fd);
        EXPECT_EQ(c.irregular, 0);
        EXPECT_EQ(c.distinct_codes, to_int(dom.cls.q, "q")) << e;
        EXPECT_EQ(c.distinct_classes, c.distinct_codes);
        EXPECT_TRUE(c.partitions_agree) << e;
    }
}

TEST(Density, Examples) {
    const DensityReport d9 = density_delta(9, {1, 2000});
    EXPECT_TRUE(d9.populated);
    EXPECT_EQ(d9.delta, make_q(1, 35));
    EXPECT_TRUE(d9.matches_formula);
    EXPECT_LE(d9.delta, d9.eta);
    EXPECT_EQ(d9.code_direct_mismatches, 0);

    const DensityReport d1 = density_delta(1, {1, 500});
    EXPECT_EQ(d1.delta, make_q(1, 3));
    EXPECT_EQ(d1.formula, make_q(1, 3));

    EXPECT_FALSE(vertex_list(49).coprimality_ok);
    EXPECT_TRUE(vertex_list(52).coprimality_ok);
    for (Int e : critical_numbers_up_to(48)) EXPECT_TRUE(vertex_list(e).coprimality_ok) << e;
}
