#include <gtest/gtest.h>

#include "exvoa/classify/formulas.hpp"
#include "exvoa/liechar/characters.hpp"

using namespace exvoa;

namespace {

// sl2 irreducible of highest weight n: z^n + z^(n-2) + ... + z^-n.
Laurent a1_string(int n) {
    Laurent l(1);
    for (int e = -n; e <= n; e += 2) l.add({e}, Rational(1));
    return l;
}

}  // namespace

TEST(Laurent, ArithmeticAndAdams) {
    Laurent x = Laurent::monomial({1, 0}), y = Laurent::monomial({0, -1}, Rational(3));
    auto p = (x + y) * (x + y);
    EXPECT_EQ(p.coeff({2, 0}), Rational(1));
    EXPECT_EQ(p.coeff({1, -1}), Rational(6));
    EXPECT_EQ(p.coeff({0, -2}), Rational(9));
    EXPECT_EQ((x + y).adams(2), Laurent::monomial({2, 0}) + Laurent::monomial({0, -2}, Rational(3)));
    EXPECT_EQ(p.at_identity(), Rational(16));
    EXPECT_EQ(exact_divide(p, x + y), x + y);
    EXPECT_THROW(x + Laurent::monomial({1}), InvalidArgument);
    EXPECT_THROW(exact_divide(x + Laurent::constant(2, Rational(1)), x + y), InvalidArgument);
}

TEST(RootSystems, CountsAndWeylGroupOrders) {
    struct Case {
        const char* name;
        std::size_t roots, weyl;
        long dim;
    } cases[] = {{"A1", 2, 2, 3}, {"A2", 6, 6, 8}, {"B2", 8, 8, 10}, {"G2", 12, 12, 14}};
    for (const auto& c : cases) {
        auto rs = root_system(c.name);
        EXPECT_EQ(rs.roots.size(), c.roots) << c.name;
        EXPECT_EQ(rs.positive_roots.size() * 2, c.roots) << c.name;
        EXPECT_EQ(weyl_group(rs).size(), c.weyl) << c.name;
        EXPECT_EQ(adjoint_character(rs).at_identity(), Rational(c.dim)) << c.name;
        EXPECT_TRUE(is_weyl_invariant(rs, adjoint_character(rs))) << c.name;
        EXPECT_EQ(root_pair_sum(rs).at_identity(), Rational(0)) << c.name;
    }
    EXPECT_THROW(root_system("E8"), RankUnsupported);
}

TEST(WeylCharacter, A1StringsAndTensorProducts) {
    auto rs = root_system("A1");
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(weyl_character(rs, {n}), a1_string(n)) << n;
    // V1 (x) V1 = V2 + V0
    EXPECT_EQ(weyl_character(rs, {1}) * weyl_character(rs, {1}), a1_string(2) + a1_string(0));
    EXPECT_EQ(weyl_character(rs, {2}), adjoint_character(rs));
}

TEST(WeylCharacter, DimensionFormulaAgreesWithTheCharacter) {
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
        auto rs = root_system(name);
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= (rs.rank == 2 ? 3 : 0); ++b) {
                Weight lam = rs.rank == 2 ? Weight{a, b} : Weight{a};
                auto chi = weyl_character(rs, lam);
                EXPECT_EQ(chi.at_identity(), weyl_dimension(rs, lam)) << name << " " << a << "," << b;
                EXPECT_TRUE(chi.is_integral() && chi.is_nonnegative());
            }
    }
    EXPECT_THROW(weyl_character(root_system("A2"), {-1, 0}), InvalidArgument);
}

TEST(WeylCharacter, AdjointIsIrreducible) {
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
        auto rs = root_system(name);
        EXPECT_EQ(find_irreducible(rs, adjoint_character(rs), 3).size(), 1u) << name;
    }
}

TEST(Chi2, DeligneCases) {
    // A1 at C = 1: dim Y = 0 and the character vanishes
    EXPECT_TRUE(chi2_from_chi1(root_system("A1"), Rational(1)).is_zero());
    auto a2 = root_system("A2");
    auto chi_a2 = chi2_from_chi1(a2, Rational(2));
    EXPECT_EQ(chi_a2.at_identity(), Rational(8));
    EXPECT_EQ(find_irreducible(a2, chi_a2, 4), std::vector<Weight>{Weight({1, 1})});
    auto g2 = root_system("G2");
    auto chi_g2 = chi2_from_chi1(g2, Rational(14, 5));
    EXPECT_EQ(chi_g2.at_identity(), Rational(27));
    auto w = find_irreducible(g2, chi_g2, 4);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(weyl_dimension(g2, w[0]), Rational(27));
}

TEST(Chi2, DimensionAtTheIdentityIsDimY) {
    const std::pair<const char*, Rational> cases[] = {
        {"A1", Rational(1)}, {"A2", Rational(2)}, {"G2", Rational(14, 5)}};
    for (const auto& [name, C] : cases) {
        auto rs = root_system(name);
        auto chi = chi2_from_chi1(rs, C);
        EXPECT_EQ(chi.at_identity(), dimY_formula()(C)) << name;
        EXPECT_TRUE(is_weyl_invariant(rs, chi)) << name;
    }
    EXPECT_TRUE(chi2_identity_check());
}

TEST(Chi2, RejectsThePoleAndNonIntegralValues) {
    EXPECT_THROW(chi2_from_chi1(root_system("A1"), Rational(22)), PoleError);
    EXPECT_THROW(chi2_from_chi1(root_system("A1"), Rational(1, 3)), NonIntegralCharacter);
}

TEST(LieTable, Lookup) {
    auto e8 = lie_table_lookup(248);
    ASSERT_EQ(e8.size(), 1u);
    EXPECT_EQ(e8[0].name, "E8");
    EXPECT_EQ(e8[0].h_dual, 30);
    auto three = lie_table_lookup(3);
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0].name, "A1");
    EXPECT_TRUE(lie_table_lookup(1).empty());
    EXPECT_EQ(lie_table_lookup(10).size(), 1u);  // B2 = C2
    EXPECT_EQ(lie_table_lookup(15).size(), 1u);  // A3 = D3
    EXPECT_EQ(lie_table_lookup(28).size(), 1u);  // D4
    EXPECT_EQ(lie_table_lookup(78).size(), 3u);  // B6, C6, E6
    EXPECT_EQ(lie_record("D4").h_dual, 6);
    EXPECT_THROW(lie_record("Q7"), InvalidArgument);
    EXPECT_THROW(lie_table_lookup(0), InvalidArgument);
}
