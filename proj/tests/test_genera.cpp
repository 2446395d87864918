#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cpn/genera.hpp"
#include "cpn/oracles.hpp"

using cpn::CohClass;
using cpn::make_rational;
using cpn::Rational;
using cpn::TotalClass;
using cpn::TotalKind;

TEST(CharSeries, LeadingCoefficients)
{
    const auto a = cpn::ahat_char(4);
    const auto l = cpn::l_char(4);
    const auto t = cpn::todd_char(4);
    EXPECT_EQ(a.q.coeffs(), (std::vector<Rational>{1, make_rational(-1, 24), make_rational(7, 5760),
                                                   make_rational(-31, 967680), make_rational(127, 154828800)}));
    EXPECT_EQ(l.q.coeffs(), (std::vector<Rational>{1, make_rational(1, 3), make_rational(-1, 45),
                                                   make_rational(2, 945), make_rational(-1, 4725)}));
    EXPECT_EQ(t.q[1], make_rational(1, 2));
    EXPECT_EQ(t.roots, TotalKind::Chern);
    EXPECT_EQ(a.roots, TotalKind::Pontrjagin);
}

TEST(TotalClasses, PontryaginOfCPn)
{
    const auto p2 = cpn::pontryagin_cpn(2);
    EXPECT_EQ(p2[1], CohClass::generator_power(2, 2, 3));
    const auto p4 = cpn::pontryagin_cpn(4);
    EXPECT_EQ(p4[1], CohClass::generator_power(4, 2, 5));
    EXPECT_EQ(p4[2], CohClass::generator_power(4, 4, 10));
    const auto p1 = cpn::pontryagin_cpn(1);
    EXPECT_EQ(p1.components().size(), 1u);
    EXPECT_EQ(p1.total(), CohClass::unit(1));
}

TEST(TotalClasses, ChernOfCPn)
{
    const auto c3 = cpn::chern_cpn(3);
    EXPECT_EQ(c3[1], CohClass::generator(3, 4));
    EXPECT_EQ(cpn::integrate(cpn::pow(c3[1], 3)), 64);
    EXPECT_EQ(cpn::integrate(cpn::chern_cpn(2)[2]), 3);
    EXPECT_EQ(cpn::chern_cpn(1)[1], CohClass::generator(1, 2));
}

TEST(TotalClasses, Validation)
{
    EXPECT_THROW(TotalClass(TotalKind::Pontrjagin, 4, {CohClass::unit(4), CohClass::generator(4)}),
                 std::invalid_argument);
    EXPECT_THROW(TotalClass(TotalKind::Chern, 2, {CohClass::generator(2)}), std::invalid_argument);
    EXPECT_THROW(TotalClass(TotalKind::Chern, 2, {CohClass::unit(3)}), std::invalid_argument);
    EXPECT_THROW(cpn::pontryagin_cpn(0), std::invalid_argument);
}

TEST(ChernPontrjagin, P1FromChern)
{
    const auto c = cpn::chern_cpn(2);
    EXPECT_EQ(cpn::p1_from_chern(c[1], c[2]), CohClass::generator_power(2, 2, 3));
    EXPECT_EQ(cpn::p1_from_chern(c[1], c[2]), cpn::pontryagin_cpn(2)[1]);
    EXPECT_TRUE(cpn::p1_from_chern(CohClass(2), CohClass(2)).is_zero());
    EXPECT_EQ(cpn::integrate(cpn::p1_from_chern(c[1], c[2])) / 3, 1);
    EXPECT_THROW(cpn::p1_from_chern(CohClass(2), CohClass(3)), std::invalid_argument);
}

TEST(ChernPontrjagin, C2FromEquality)
{
    EXPECT_EQ(cpn::c2_from_equality(2), CohClass::generator_power(2, 2, 3));
    EXPECT_EQ(cpn::c2_from_equality(3), CohClass::generator_power(3, 2, 6));
    EXPECT_EQ(cpn::c2_from_equality(4), CohClass::generator_power(4, 2, 10));
    // Matches the genuine c_2 of CP^n.
    for (std::size_t n = 2; n <= 8; ++n)
        EXPECT_EQ(cpn::c2_from_equality(n), cpn::chern_cpn(n)[2]);
}

TEST(ChernPontrjagin, GapVanishesOnEqualityData)
{
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto c1 = CohClass::generator(n, static_cast<long long>(n + 1));
        EXPECT_TRUE(cpn::chern_number_gap(c1, cpn::c2_from_equality(n)).is_zero());
    }
}

TEST(GenusEval, AhatOfCP2)
{
    const auto g = cpn::genus_eval(cpn::ahat_char(), cpn::pontryagin_cpn(2));
    EXPECT_EQ(g, CohClass(2, {1, 0, make_rational(-1, 8)}));
    EXPECT_EQ(cpn::integrate(g), make_rational(-1, 8));
}

TEST(GenusEval, SignatureOfCP2)
{
    const auto g = cpn::genus_eval(cpn::l_char(4), cpn::pontryagin_cpn(2));
    EXPECT_EQ(cpn::integrate(g), 1);
}

TEST(GenusEval, ToddOfCPnIsOne)
{
    const auto todd = cpn::todd_char(12);
    for (std::size_t n = 1; n <= 12; ++n)
        EXPECT_EQ(cpn::integrate(cpn::genus_eval(todd, cpn::chern_cpn(n))), 1) << "n=" << n;
}

TEST(GenusEval, ToddRoutesAgree)
{
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto from_chern = cpn::genus_eval(cpn::todd_char(n), cpn::chern_cpn(n));
        const auto from_pontrjagin = cpn::todd_class(cpn::chern_cpn(n)[1], cpn::pontryagin_cpn(n));
        EXPECT_EQ(from_chern, from_pontrjagin) << "n=" << n;
    }
}

TEST(GenusEval, KindMismatchAndBadSeries)
{
    EXPECT_THROW(cpn::genus_eval(cpn::todd_char(4), cpn::pontryagin_cpn(4)), std::invalid_argument);
    EXPECT_THROW(cpn::genus_eval(cpn::ahat_char(4), cpn::chern_cpn(4)), std::invalid_argument);
    cpn::CharSeries bad{cpn::GenusKind::Custom, TotalKind::Chern, cpn::TruncatedSeries::constant(4, 2)};
    EXPECT_THROW(cpn::genus_eval(bad, cpn::chern_cpn(3)), std::domain_error);
}

TEST(GenusEval, PowerSumsOfCPn)
{
    // All Chern roots equal h, so s_k = (n+1) h^k.
    const auto s = cpn::power_sums(cpn::chern_cpn(5));
    for (std::size_t k = 1; k <= 5; ++k)
        EXPECT_EQ(s[k], CohClass::generator_power(5, k, 6));
}

TEST(GenusEval, MatchesSplitClassOracle)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> count(1, 4), dim(2, 8), num(-7, 7), den(1, 6);
    const auto ahat = cpn::ahat_char(8);
    const auto l = cpn::l_char(8);
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<std::size_t>(dim(rng));
        std::vector<Rational> roots;
        for (int j = count(rng); j > 0; --j)
            roots.push_back(make_rational(num(rng), den(rng)));
        const auto split = cpn::split_pontryagin(n, roots);
        EXPECT_EQ(cpn::genus_eval(ahat, split), cpn::oracle::split_genus_direct(ahat, n, roots));
        EXPECT_EQ(cpn::genus_eval(l, split), cpn::oracle::split_genus_direct(l, n, roots));
    }
}

TEST(GenusEval, MultiplicativeUnderWhitneySum)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    const auto l = cpn::l_char(6);
    for (std::size_t n = 2; n <= 8; ++n) {
        // Arbitrary (not necessarily split-looking) total classes.
        std::vector<CohClass> a{CohClass::unit(n)}, b{CohClass::unit(n)};
        for (std::size_t i = 1; 2 * i <= n; ++i) {
            a.push_back(CohClass::generator_power(n, 2 * i, make_rational(num(rng), den(rng))));
            b.push_back(CohClass::generator_power(n, 2 * i, make_rational(num(rng), den(rng))));
        }
        const TotalClass ta(TotalKind::Pontrjagin, n, a), tb(TotalKind::Pontrjagin, n, b);
        EXPECT_EQ(cpn::genus_eval(l, ta * tb), cpn::genus_eval(l, ta) * cpn::genus_eval(l, tb));
    }
}

TEST(GenusEval, AhatOnCPnMatchesPowerOfSeries)
{
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto via_newton = cpn::genus_eval(cpn::ahat_char(n), cpn::pontryagin_cpn(n));
        const auto via_power =
            cpn::apply_series(cpn::pow(cpn::ahat_series(n), static_cast<unsigned>(n + 1)), CohClass::generator(n));
        EXPECT_EQ(via_newton, via_power) << "n=" << n;
    }
}

TEST(ToddClass, Examples)
{
    EXPECT_EQ(cpn::integrate(cpn::todd_class(CohClass::generator(3, 4), cpn::pontryagin_cpn(3))), 1);
    EXPECT_EQ(cpn::todd_class(CohClass(2), TotalClass::trivial(TotalKind::Pontrjagin, 2)), CohClass::unit(2));
    EXPECT_EQ(cpn::integrate(cpn::todd_class(CohClass::generator(2, -3), cpn::pontryagin_cpn(2))), 1);
    EXPECT_THROW(cpn::todd_class(CohClass(3), cpn::pontryagin_cpn(2)), std::invalid_argument);
    EXPECT_THROW(cpn::todd_class(CohClass(2), cpn::chern_cpn(2)), std::invalid_argument);
}
