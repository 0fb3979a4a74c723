#include <gtest/gtest.h>

#include "exvoa/exact/matrix.hpp"
#include "exvoa/exact/ratfunc.hpp"
#include "exvoa/exact/roots.hpp"
#include "exvoa/virasoro/module.hpp"

using namespace exvoa;

TEST(Rational, ParsesAndPrintsCanonically) {
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Rational::parse("-22/5").to_string(), "-22/5");
    EXPECT_EQ(Rational::parse("+7").to_string(), "7");
    EXPECT_EQ(Rational::parse("0/9").to_string(), "0");
    EXPECT_EQ(Rational(4, -8).to_string(), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* s : {"", "1/", "/2", "1.5", "a", "1/-2", "1 /2", "--1", "1e3"})
        EXPECT_THROW(Rational::parse(s), ParseError) << s;
    EXPECT_THROW(Rational::parse("3/0"), DivisionByZero);
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, Arithmetic) {
    Rational a(2, 3), b(-5, 7);
    EXPECT_EQ(a + b, Rational(-1, 21));
    EXPECT_EQ(a * b, Rational(-10, 21));
    EXPECT_EQ(a / b, Rational(-14, 15));
    EXPECT_TRUE(Rational(8, 4).is_integer());
    EXPECT_EQ(binomial(-4, 3), Integer(-20));
    EXPECT_EQ(binomial(6, 2), Integer(15));
}

TEST(Poly, EvaluationDivisionAndGcd) {
    PolyQ x = PolyQ::x();
    PolyQ p = (x - PolyQ(Rational(2))) * (x + PolyQ(Rational(3)));
    EXPECT_EQ(p(Rational(2)), Rational(0));
    EXPECT_EQ(p.degree(), 2);
    auto [q, r] = p.divmod(x - PolyQ(Rational(2)));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, x + PolyQ(Rational(3)));
    PolyQ g = gcd(p, (x - PolyQ(Rational(2))) * (x - PolyQ(Rational(7))));
    EXPECT_EQ(g.monic(), x - PolyQ(Rational(2)));
    EXPECT_EQ(squarefree_part(p * p).monic(), p.monic());
}

TEST(RatFunc, CanonicalFormAndEvaluation) {
    RatFunc C = RatFunc::C();
    RatFunc f = (C * C - RatFunc(1)) / (C - RatFunc(1));
    EXPECT_EQ(f, C + RatFunc(1));
    EXPECT_EQ(f.eval(Rational(4)), Rational(5));
    RatFunc g = RatFunc(1) / C;
    EXPECT_THROW(g.eval(Rational(0)), PoleError);
    EXPECT_THROW(RatFunc(1) / RatFunc(0), DivisionByZero);
    // d_1 = C(5C+22)/(10-C) at C = 8 gives 248
    RatFunc d1 = C * (RatFunc(5) * C + RatFunc(22)) / (RatFunc(10) - C);
    EXPECT_EQ(d1.eval(Rational(8)), Rational(248));
}

TEST(Matrix, BareissMatchesCofactorExpansion) {
    Matrix<Rational> m(3, 3);
    const long v[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(v[i][j]);
    EXPECT_EQ(bareiss_determinant(m), Rational(4));
    Matrix<Rational> z(2, 2);
    z(0, 1) = Rational(1);
    z(1, 0) = Rational(1);
    EXPECT_EQ(bareiss_determinant(z), Rational(-1));  // needs a row swap
}

TEST(Matrix, SolveLinearReportsRank) {
    Matrix<Rational> a(2, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(2);
    a(1, 0) = Rational(2);
    a(1, 1) = Rational(4);
    auto s = solve_linear(a, {Rational(1), Rational(2)});
    EXPECT_EQ(s.rank, 1u);
    EXPECT_TRUE(s.consistent);
    EXPECT_FALSE(s.solution.has_value());
    a(1, 1) = Rational(5);
    s = solve_linear(a, {Rational(1), Rational(3)});
    ASSERT_TRUE(s.solution);
    EXPECT_EQ((*s.solution)[0], Rational(-1));
    EXPECT_EQ((*s.solution)[1], Rational(1));
}

TEST(Roots, RationalRootsAreExactAndSorted) {
    auto p = poly_from_roots({Rational(-22, 5), Rational(0), Rational(1, 2), Rational(-68, 7)});
    p = p * (PolyQ::x() * PolyQ::x() + PolyQ(Rational(2)));  // no real roots added
    auto r = rational_roots(p);
    std::vector<Rational> want{Rational(-68, 7), Rational(-22, 5), Rational(0), Rational(1, 2)};
    EXPECT_EQ(r, want);
    // irrational roots are not reported
    EXPECT_TRUE(rational_roots(PolyQ::x() * PolyQ::x() - PolyQ(Rational(2))).empty());
}

TEST(Roots, RootsOverTheFunctionField) {
    // (t + C/24)(t - C/24 - 1/6) has roots -C/24 and C/24 + 1/6
    using PR = Poly<RatFunc>;
    RatFunc C = RatFunc::C();
    PR t = PR::x();
    PR p = (t + PR(C / RatFunc(24))) * (t - PR(C / RatFunc(24) + RatFunc(Rational(1, 6))));
    auto roots = rational_function_roots(p);
    ASSERT_EQ(roots.size(), 2u);
    bool a = false, b = false;
    for (const auto& r : roots) {
        a |= r == -C / RatFunc(24);
        b |= r == C / RatFunc(24) + RatFunc(Rational(1, 6));
    }
    EXPECT_TRUE(a && b);
}
