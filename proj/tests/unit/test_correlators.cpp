#include <gtest/gtest.h>

#include "exvoa/classify/formulas.hpp"
#include "exvoa/correlators/correlators.hpp"
#include "support/mode_oracle.hpp"

using namespace exvoa;

namespace {

RatFunc C() { return RatFunc::C(); }
RatFunc R(long v) { return RatFunc(v); }
DPoly d() { return d_symbol(); }
DPoly konst(const RatFunc& f) { return DPoly(f); }

}  // namespace

TEST(GFunction, LieIsSymmetricOfDegreeFour) {
    auto g = g_function_lie();
    EXPECT_TRUE(g.is_homogeneous(4));
    EXPECT_EQ(g.swapped(), g);
    EXPECT_EQ(g.coeff(2, 2, Bilinear::S), -d() + konst(R(4)) - konst(R(6)));
    EXPECT_EQ(g.coeff(4, 0, Bilinear::S), konst(R(-1)));
    EXPECT_EQ(g.coeff(3, 1, Bilinear::K), konst(R(1)));
}

TEST(GFunction, GriessIsSymmetricOfDegreeEight) {
    auto g = g_function_griess();
    EXPECT_TRUE(g.is_homogeneous(8));
    EXPECT_EQ(g.swapped(), g);
    EXPECT_TRUE(g.degrees(Bilinear::K).empty());
}

TEST(ExpandInW, LieCoefficients) {
    auto rep = expand_in_w(g_function_lie(), Family::lie, 6);
    ASSERT_EQ(rep.size(), 7u);
    for (const auto& c : rep) EXPECT_TRUE(c.pure) << c.n;
    EXPECT_EQ(rep[0].S, -d());
    EXPECT_TRUE(rep[0].K.is_zero());
    EXPECT_TRUE(rep[1].S.is_zero());
    EXPECT_TRUE(rep[1].K.is_zero());
    const long S[] = {0, 0, -2, 2, -3, 4, -5};
    const long K[] = {0, 0, 1, -1, 1, -1, 1};
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(rep[static_cast<std::size_t>(n)].S, konst(R(S[n]))) << n;
        EXPECT_EQ(rep[static_cast<std::size_t>(n)].K, konst(R(K[n]))) << n;
    }
}

TEST(ExpandInW, GriessCoefficients) {
    auto rep = expand_in_w(g_function_griess(), Family::griess, 8);
    for (const auto& c : rep) {
        EXPECT_TRUE(c.pure) << c.n;
        EXPECT_TRUE(c.K.is_zero());
    }
    EXPECT_EQ(rep[0].S, d());
    EXPECT_TRUE(rep[1].S.is_zero());
    EXPECT_EQ(rep[2].S, d().scaled(R(8) / C()));
    // odd orders do not vanish: c_3 = -c_2
    EXPECT_EQ(rep[3].S, d().scaled(R(-8) / C()));
    EXPECT_EQ(rep[4].S, d().scaled((R(36) * C() + R(352)) / (C() * (R(5) * C() + R(22)))));
}

TEST(ExpandInW, StrictModeRejectsMixedPowers) {
    SymbolicBivariate g;
    g.add(4, 0, Bilinear::S, konst(R(1)));
    g.add(0, 3, Bilinear::S, konst(R(1)));
    EXPECT_THROW(expand_in_w(g, Family::lie, 2), ImpurePower);
    auto loose = expand_in_w(g, Family::lie, 2, false);
    EXPECT_FALSE(loose[0].pure);
}

// The frozen zero-mode table against the Borcherds-identity oracle.
TEST(ZeroModes, FrozenTableMatchesOracle) {
    const std::vector<Partition> parts = {{},     {2},    {3},    {4},    {2, 2}, {5},
                                          {3, 2}, {6},    {4, 2}, {3, 3}, {2, 2, 2}};
    for (long c : {0L, 7L, 24L, -3L}) {
        oracle::ModeOracle<PolyQ> o(VirasoroModule<PolyQ>::verma(PolyQ(Rational(c)), PolyQ::x()));
        for (const auto& p : parts) EXPECT_EQ(o.zero_mode_on_highest(p), zero_mode_on_primary(p)) << partition_key(p) << " C=" << c;
    }
    EXPECT_THROW(zero_mode_on_primary({7}), InvalidArgument);
}

TEST(ZeroModes, SymbolicCentralChargeDoesNotEnter) {
    oracle::ModeOracle<RatFunc> o(VirasoroModule<RatFunc>::verma(C(), R(2)));
    for (const auto& p : vacuum_basis(6))
        EXPECT_EQ(o.zero_mode_on_highest(p), RatFunc(zero_mode_on_primary(p)(Rational(2)))) << partition_key(p);
}

TEST(Killing, RelationBetweenKillingFormAndMetric) {
    auto k = killing_relation();
    EXPECT_EQ(k.kappa, konst(R(2)) + d().scaled(R(-2) / C()));
    // E8 at C = 8: K = -2 h_dual S with d = 248, h_dual = 30, i.e. kappa = -60
    EXPECT_EQ(k.at(R(248)).eval(Rational(8)), Rational(-60));
}

TEST(Closure, LieDimension) {
    auto cl = lie_dimension_closure();
    EXPECT_EQ(cl.equation.degree(), 1);
    EXPECT_EQ(cl.dimension, C() * (R(5) * C() + R(22)) / (R(10) - C()));
}

TEST(Closure, GriessDimensionIsTheP2Formula) {
    auto cl = griess_dimension_closure();
    EXPECT_EQ(cl.dimension, p2_griess_formula().value);
    EXPECT_EQ(cl.dimension.eval(Rational(24)), Rational(196883));
}

TEST(Closure, GriessLowOrdersAreIdentities) {
    auto rep = expand_in_w(g_function_griess(), Family::griess, 4);
    auto lam = solve_casimir<RatFunc>(2, 4, C());
    for (int n : {2, 4}) {
        DPoly rhs = d().scaled(zero_mode_pairing(lam.chain[static_cast<std::size_t>(n)], Rational(2)));
        EXPECT_EQ(rep[static_cast<std::size_t>(n)].S, rhs) << n;
    }
}

TEST(TraceForm, GriessValues) {
    EXPECT_EQ(griess_trace_form(Rational(196883), Rational(24)), Rational(65628));
    EXPECT_THROW(griess_trace_form(Rational(1), Rational(0)), PoleError);
    EXPECT_EQ(griess_trace_form(p2_griess_formula().value).eval(Rational(8)), Rational(156));
}
