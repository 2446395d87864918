#include <cstdint>

#include <gtest/gtest.h>

#include "cpn/surface.hpp"

using cpn::BlowupRing;
using cpn::make_rational;
using cpn::Rational;
using cpn::SurfaceInvariants;

TEST(Surfaces, ProjectivePlane)
{
    const SurfaceInvariants cp2{3, 1, 9, 1};
    EXPECT_TRUE(cp2.consistent());
    EXPECT_EQ(cpn::signature_from_p1(3), 1);
    EXPECT_EQ(cpn::solve_K2(1, 3), 9);
    EXPECT_EQ(cpn::c1sq_from_signature(1, 3), 9);
}

TEST(Surfaces, FakeProjectivePlane)
{
    // chi(O) = 1, chi_top = 3, K ample: tau = 1, K^2 = 9.
    const SurfaceInvariants fake{3, 1, 9, 1};
    EXPECT_TRUE(fake.consistent());
    EXPECT_EQ(cpn::c1sq_from_signature(fake.tau, fake.chi_top), fake.K2);
}

TEST(Surfaces, KnownExamples)
{
    EXPECT_TRUE((SurfaceInvariants{24, -16, 0, 2}).consistent()); // K3
    EXPECT_TRUE((SurfaceInvariants{4, 0, 8, 1}).consistent());    // P1 x P1
    EXPECT_TRUE((SurfaceInvariants{0, 0, 0, 0}).consistent());    // abelian surface
    EXPECT_FALSE((SurfaceInvariants{3, 1, 9, 2}).noether_consistent());
    EXPECT_FALSE((SurfaceInvariants{3, 0, 9, 1}).signature_consistent());
}

TEST(Surfaces, NoetherOnBlowupsOfPlane)
{
    // CP^2 blown up at k points: chi_top = 3 + k, tau = 1 - k, K^2 = 9 - k, chi(O) = 1.
    for (std::int64_t k = 0; k <= 9; ++k)
        EXPECT_TRUE((SurfaceInvariants{3 + k, 1 - k, 9 - k, 1}).consistent()) << k;
}

TEST(Surfaces, RiemannRoch)
{
    // On CP^2 with K = -3H: chi(O(d)) = (d+1)(d+2)/2.
    for (std::int64_t d = -5; d <= 5; ++d)
        EXPECT_EQ(cpn::surface_rr(d * d, -3 * d, 1), Rational((d + 1) * (d + 2), 2)) << d;
    EXPECT_EQ(cpn::surface_rr(0, 0, make_rational(1, 2)), make_rational(1, 2));
}

TEST(Blowup, ExceptionalSelfIntersection)
{
    // (-1)^{n-1}
    for (std::size_t n = 2; n <= 9; ++n)
        EXPECT_EQ(cpn::exceptional_top_self_intersection(n), n % 2 == 0 ? -1 : 1) << n;
    EXPECT_THROW(cpn::exceptional_top_self_intersection(1), std::invalid_argument);
}

TEST(Blowup, ThreefoldValue)
{
    EXPECT_EQ(cpn::blowup_c1_top(3), -8);
    EXPECT_EQ(cpn::blowup_c1_top(3, Rational(-2)), -8);
}

TEST(Blowup, CanonicalCoefficientClosedForm)
{
    // (-(n-1))^n (-1)^{n-1} = -(n-1)^n
    for (std::size_t n = 2; n <= 9; ++n) {
        Rational expected = -1;
        for (std::size_t i = 0; i < n; ++i)
            expected *= Rational(static_cast<long long>(n) - 1);
        EXPECT_EQ(cpn::blowup_c1_top(n), expected) << n;
    }
}

TEST(Blowup, FixedCoefficientTwo)
{
    for (std::size_t n = 2; n <= 9; ++n) {
        Rational expected = n % 2 == 0 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            expected *= -2;
        EXPECT_EQ(cpn::blowup_c1_top(n, Rational(-2)), expected) << n;
    }
}

TEST(Blowup, SurfaceCaseMatchesPlaneBlowup)
{
    // One blowup of a surface lowers c_1^2 by 1.
    EXPECT_EQ(cpn::blowup_c1_top(2), -1);
    const BlowupRing ring(2, 1, -1);
    EXPECT_EQ(ring.integrate_power({3, -1}), 8);
}

TEST(BlowupRing, MixedTermsVanish)
{
    const BlowupRing ring(3, 5, 1);
    const auto a = ring.embed({1, 0});
    const auto e = ring.embed({0, 1});
    const auto ae = ring.multiply(a, e);
    for (std::size_t k = 0; k <= 3; ++k) {
        EXPECT_EQ(ae.a[k], 0);
        EXPECT_EQ(ae.e[k], 0);
    }
    EXPECT_EQ(ring.integrate_power({1, 0}), 5);
    EXPECT_EQ(ring.integrate_power({0, 1}), 1);
    // (a + e)^3 = a^3 + e^3
    EXPECT_EQ(ring.integrate_power({1, 1}), 6);
    EXPECT_EQ(ring.integrate_power({2, -1}), 39);
}
