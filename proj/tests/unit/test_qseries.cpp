#include <gtest/gtest.h>

#include "exvoa/qseries/jfunction.hpp"
#include "support/oracles.hpp"

using namespace exvoa;

TEST(QSeries, TruncationIsTheMinimumOfTheOperands) {
    QSeries<Rational> a(Rational(0), {Rational(1), Rational(2), Rational(3)});
    QSeries<Rational> b(Rational(0), {Rational(1), Rational(1)});
    EXPECT_EQ((a + b).trunc(), 1);
    EXPECT_EQ((a * b).trunc(), 1);
    EXPECT_THROW(a.coeff(3), TruncationError);
}

TEST(QSeries, MixedLeadingExponents) {
    QSeries<Rational> a(Rational(-1, 3), {Rational(1), Rational(5)});
    QSeries<Rational> b(Rational(2, 3), {Rational(7)});
    auto s = a + b;
    EXPECT_EQ(s.lead(), Rational(-1, 3));
    EXPECT_EQ(s.coeff(1), Rational(12));
    QSeries<Rational> c(Rational(1, 2), {Rational(1)});
    EXPECT_THROW(a + c, SeriesMismatch);
}

TEST(QSeries, DeriveIsQdDq) {
    // D(q^(1/2) (1 + q)) = (1/2) q^(1/2) + (3/2) q^(3/2)
    QSeries<Rational> f(Rational(1, 2), {Rational(1), Rational(1)});
    auto d = f.derive();
    EXPECT_EQ(d.coeff(0), Rational(1, 2));
    EXPECT_EQ(d.coeff(1), Rational(3, 2));
}

TEST(QSeries, InverseOfOneMinusQ) {
    QSeries<Rational> f(Rational(0), {Rational(1), Rational(-1), Rational(0), Rational(0)});
    auto g = f.inverse();
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(g.coeff(n), Rational(1));
}

TEST(Eisenstein, ConstantTermsAreMinusBernoulliOverFactorial) {
    EXPECT_EQ(eisenstein(2, 3).coeff(0), Rational(-1, 12));
    EXPECT_EQ(eisenstein(4, 3).coeff(0), Rational(1, 720));
    EXPECT_EQ(eisenstein(6, 3).coeff(0), Rational(-1, 30240));
    EXPECT_THROW(eisenstein(3, 3), OddWeight);
}

TEST(Eisenstein, ClassicalNormalization) {
    auto e2 = classical_eisenstein(2, 3), e4 = classical_eisenstein(4, 3), e6 = classical_eisenstein(6, 3);
    EXPECT_EQ(e2.coeff(1), Rational(-24));
    EXPECT_EQ(e4.coeff(1), Rational(240));
    EXPECT_EQ(e4.coeff(2), Rational(2160));
    EXPECT_EQ(e6.coeff(1), Rational(-504));
}

TEST(Eisenstein, CacheReturnsTruncationsOfTheLongestExpansion) {
    auto longer = eisenstein(4, 40);
    auto shorter = eisenstein(4, 10);
    EXPECT_EQ(shorter, eisenstein_uncached(4, 10));
    EXPECT_EQ(longer.truncated(10), shorter);
}

TEST(JSeries, MatchesTheEtaProductOracleThrough60) {
    auto J = jseries(60);
    auto oracle = oracle::j_minus_744_oracle(60);
    ASSERT_EQ(J.lead(), Rational(-1));
    ASSERT_EQ(J.trunc(), 61);
    for (int i = 0; i <= 61; ++i) EXPECT_EQ(J.coeff(i), Rational(oracle[static_cast<std::size_t>(i)])) << i;
}

TEST(JSeries, FrozenOracleValues) {
    auto oracle = oracle::j_minus_744_oracle(5);
    EXPECT_EQ(oracle[0], 1);
    EXPECT_EQ(oracle[1], 0);
    EXPECT_EQ(oracle[2], 196884);
    EXPECT_EQ(oracle[3], 21493760);
    EXPECT_EQ(oracle[4], 864299970);
    EXPECT_EQ(oracle[5], mpz_class("20245856256"));
    EXPECT_EQ(oracle[6], mpz_class("333202640600"));
}

TEST(JSeries, IndependentOfGuardTerms) {
    auto a = jseries(30), b = jseries(35);
    EXPECT_EQ(b.truncated(a.trunc()), a);
    for (const auto& c : a.coeffs()) EXPECT_TRUE(c.is_integer());
}
