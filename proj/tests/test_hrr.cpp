#include <algorithm>

#include <gtest/gtest.h>

#include "cpn/hrr.hpp"

using cpn::HrrProblem;
using cpn::Rational;

namespace {

// binom(n+s, n) for s >= 0 by Pascal's triangle; independent of the falling
// product used by chi_closed_form.
Rational pascal(int top, int k)
{
    std::vector<std::vector<Rational>> row(top + 1);
    for (int i = 0; i <= top; ++i) {
        row[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j)
            row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return row[top][k];
}

} // namespace

TEST(ChiGenusRoute, Examples)
{
    EXPECT_EQ(cpn::chi_genus_route({3, 4, 0}), 1);
    EXPECT_EQ(cpn::chi_genus_route({3, 4, 1}), 4);
    EXPECT_EQ(cpn::chi_genus_route({2, -3, 0}), 1);
}

TEST(ChiGenusRoute, RejectsParityViolation)
{
    EXPECT_THROW(cpn::chi_genus_route({3, 3, 0}), std::invalid_argument);
    EXPECT_THROW(cpn::chi_genus_route({2, 2, 0}), std::invalid_argument);
    EXPECT_THROW(cpn::chi_genus_route({0, 1, 0}), std::invalid_argument);
    EXPECT_FALSE(cpn::parity_ok(2, -4));
    EXPECT_TRUE(cpn::parity_ok(2, -3));
}

TEST(ChiSeriesRoute, Examples)
{
    EXPECT_EQ(cpn::chi_series_route(3, 0), 1);
    EXPECT_EQ(cpn::chi_series_route(2, -3), 1);
    EXPECT_EQ(cpn::chi_series_route(4, 2), 15);
}

TEST(ChiClosedForm, Examples)
{
    EXPECT_EQ(cpn::chi_closed_form(3, 1), 4);
    EXPECT_EQ(cpn::chi_closed_form(2, -3), 1);
    EXPECT_EQ(cpn::chi_closed_form(5, -2), 0);
    for (int n = 1; n <= 8; ++n)
        for (int s = 0; s <= 8; ++s)
            EXPECT_EQ(cpn::chi_closed_form(n, s), pascal(n + s, n));
}

TEST(ResidueRoute, Examples)
{
    EXPECT_EQ(cpn::residue_route(3, 0), 1);
    EXPECT_EQ(cpn::residue_route(2, 1), 3);
    EXPECT_EQ(cpn::residue_route(4, -5), 1);
}

TEST(ResidueRoute, IntegrandIsInverseBinomialPower)
{
    // After substitution the integrand is (1-y)^{-s-1}, coefficient by coefficient.
    for (int n = 1; n <= 6; ++n)
        for (int s = -4; s <= 4; ++s)
            EXPECT_EQ(cpn::residue_integrand(n, s), cpn::inverse_binomial_power(n, s + 1)) << n << " " << s;
}

TEST(ResidueRoute, SubstitutionInverse)
{
    const auto z = cpn::substitution_inverse(8);
    EXPECT_EQ(z, -cpn::log(cpn::TruncatedSeries(8, {1, -1})));
}

TEST(HrrAgreement, AllRoutesSmallRange)
{
    for (int n = 1; n <= 8; ++n)
        for (int s = -9; s <= 9; ++s) {
            const Rational closed = cpn::chi_closed_form(n, s);
            EXPECT_EQ(cpn::chi_series_route(n, s), closed);
            EXPECT_EQ(cpn::residue_route(n, s), closed);
            EXPECT_EQ(cpn::chi_genus_route({n, n + 1 + 2 * s, 0}), closed);
            EXPECT_EQ(cpn::chi_genus_route({n, n + 1, s}), closed);
        }
}

TEST(HrrAgreement, GenusRouteDependsOnTotalShift)
{
    // Only s + (lambda - n - 1)/2 matters.
    for (int n = 1; n <= 6; ++n)
        for (int lambda = -(n + 1); lambda <= n + 1; lambda += 2)
            for (int s = -3; s <= 3; ++s)
                EXPECT_EQ(cpn::chi_genus_route({n, lambda, s}),
                          cpn::chi_closed_form(n, s + (lambda - n - 1) / 2));
}

TEST(Classify, Examples)
{
    const auto c3 = cpn::classify_c1(3);
    EXPECT_EQ(c3.twists, (std::vector<std::int64_t>{0}));
    EXPECT_EQ(c3.lambdas, (std::vector<std::int64_t>{4}));
    const auto c2 = cpn::classify_c1(2);
    EXPECT_EQ(c2.twists, (std::vector<std::int64_t>{-3, 0}));
    EXPECT_EQ(c2.lambdas, (std::vector<std::int64_t>{-3, 3}));
    const auto c6 = cpn::classify_c1(6);
    EXPECT_EQ(c6.twists, (std::vector<std::int64_t>{-7, 0}));
    EXPECT_EQ(c6.lambdas, (std::vector<std::int64_t>{-7, 7}));
}

TEST(Classify, CertifiedAndSubstitutesBack)
{
    for (int n = 1; n <= 16; ++n) {
        const auto cls = cpn::classify_c1(n);
        EXPECT_TRUE(cls.exhaustive()) << n;
        EXPECT_EQ(cls.window_low, -n - 2);
        EXPECT_EQ(cls.window_high, 1);
        for (std::size_t i = 0; i < cls.twists.size(); ++i) {
            EXPECT_EQ(cpn::chi_closed_form(n, cls.twists[i]), 1);
            EXPECT_EQ(cpn::chi_genus_route({n, cls.lambdas[i], 0}), 1);
        }
        EXPECT_EQ(cls.twists.size(), n % 2 == 0 ? 2u : 1u);
    }
}

TEST(Classify, BruteForceWideWindow)
{
    // A much wider search finds nothing outside the certified window.
    for (int n = 1; n <= 8; ++n) {
        const auto cls = cpn::classify_c1(n);
        std::vector<std::int64_t> found;
        for (int s = -60; s <= 60; ++s)
            if (cpn::chi_closed_form(n, s) == 1)
                found.push_back(s);
        EXPECT_EQ(found, cls.twists) << n;
    }
}

TEST(FanoBranch, SectionCount)
{
    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(cpn::chi_genus_route({n, n + 1, 1}), n + 1);
}
