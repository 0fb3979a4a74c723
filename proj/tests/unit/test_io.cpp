#include <gtest/gtest.h>

#include "exvoa/correlators/correlators.hpp"
#include "exvoa/io/codec.hpp"
#include "exvoa/io/table.hpp"
#include "exvoa/mde/solver.hpp"

using namespace exvoa;
using namespace exvoa::io;

namespace {

// Minimal RFC 4180 reader for checking the writer.
std::vector<std::vector<std::string>> parse_csv(const std::string& s) {
    std::vector<std::vector<std::string>> rows(1);
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (quoted) {
            if (ch == '"' && i + 1 < s.size() && s[i + 1] == '"') field += '"', ++i;
            else if (ch == '"') quoted = false;
            else field += ch;
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            rows.back().push_back(field), field.clear();
        } else if (ch == '\r' && i + 1 < s.size() && s[i + 1] == '\n') {
            rows.back().push_back(field), field.clear();
            rows.emplace_back();
            ++i;
        } else {
            field += ch;
        }
    }
    rows.pop_back();
    return rows;
}

}  // namespace

TEST(Json, RationalAndPolynomials) {
    EXPECT_EQ(to_json(Rational(-7, 3)), "-7/3");
    EXPECT_EQ(rational_from_json(to_json(Rational(5))), Rational(5));
    EXPECT_THROW(rational_from_json(json(3)), ParseError);
    EXPECT_THROW(rational_from_json(json("1/0")), DivisionByZero);
    EXPECT_THROW(rational_from_json(json("1.5")), ParseError);
    RatFunc f = RatFunc::C() * (RatFunc(5) * RatFunc::C() + RatFunc(22)) / (RatFunc(10) - RatFunc::C());
    EXPECT_EQ(ratfunc_from_json(to_json(f)), f);
    DPoly p = d_symbol().scaled(f) + DPoly(RatFunc(Rational(1, 2)));
    EXPECT_EQ(dpoly_from_json(to_json(p)), p);
}

TEST(Json, SeriesAndSolutions) {
    auto s = solve_family<Rational>(Family::lie, Rational(8), 5);
    auto back = mde_solution_from_json<Rational>(to_json(s));
    EXPECT_EQ(back.series, s.series);
    EXPECT_EQ(back.indicial_roots, s.indicial_roots);
    EXPECT_EQ(back.resonances, s.resonances);
    EXPECT_EQ(back.residual_verified, s.residual_verified);
    EXPECT_EQ(qseries_from_json<Rational>(to_json(s.series)), s.series);
    auto sym = solve_family<RatFunc>(Family::griess, RatFunc::C(), 3);
    EXPECT_EQ(mde_solution_from_json<RatFunc>(to_json(sym)).series, sym.series);
    json bad = to_json(s.series);
    bad["trunc"] = 99;
    EXPECT_THROW(qseries_from_json<Rational>(bad), ParseError);
}

TEST(Json, VirasoroVectorsAndPartitionKeys) {
    VirasoroVector<Rational> v(6);
    v.add({4, 2}, Rational(3, 4));
    v.add({2, 2, 2}, Rational(-1));
    EXPECT_EQ(virasoro_vector_from_json<Rational>(to_json(v)), v);
    EXPECT_EQ(partition_from_key("[]"), Partition{});
    EXPECT_EQ(partition_from_key("[3,-2]"), (Partition{3, -2}));
    EXPECT_THROW(partition_from_key("[3,x]"), ParseError);
    EXPECT_THROW(partition_from_key("3,2"), ParseError);
}

TEST(Json, CasimirReportAndVerdicts) {
    auto rep = expand_in_w(g_function_lie(), Family::lie, 4);
    auto back = casimir_report_from_json(to_json(rep));
    ASSERT_EQ(back.size(), rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) {
        EXPECT_EQ(back[i].n, rep[i].n);
        EXPECT_EQ(back[i].S, rep[i].S);
        EXPECT_EQ(back[i].K, rep[i].K);
        EXPECT_EQ(back[i].pure, rep[i].pure);
    }
    for (const auto& C : {Rational(24), Rational(52, 5)}) {
        auto v = scan_candidate(Family::griess, C, 20);
        auto w = scan_verdict_from_json(to_json(v));
        EXPECT_EQ(w.C, v.C);
        EXPECT_EQ(w.pass, v.pass);
        EXPECT_EQ(w.first_failure.has_value(), v.first_failure.has_value());
        if (v.first_failure) {
            EXPECT_EQ(w.first_failure->n, v.first_failure->n);
            EXPECT_EQ(w.first_failure->value, v.first_failure->value);
        }
    }
}

TEST(Json, LaurentTermsAreIntegers) {
    Laurent chi(2);
    chi.add({1, -1}, Rational(3));
    chi.add({0, 0}, Rational(1, 2));
    auto j = to_json(chi);
    EXPECT_TRUE(j["terms"]["[1,-1]"].is_number_integer());
    EXPECT_EQ(j["terms"]["[0,0]"], "1/2");
    EXPECT_EQ(laurent_from_json(j), chi);
}

TEST(Table, CsvQuotingRoundTrips) {
    Table t{"t", {"a", "b,c", "d"}, {}};
    t.add_row({"1/2", "say \"hi\"", "x\ny"});
    t.add_row({"", ",", "\""});
    std::string csv = render_csv(t);
    EXPECT_EQ(csv.substr(0, 11), "a,\"b,c\",d\r\n");
    auto rows = parse_csv(csv);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], t.columns);
    EXPECT_EQ(rows[1], t.rows[0]);
    EXPECT_EQ(rows[2], t.rows[1]);
    EXPECT_THROW(t.add_row({"1"}), InvalidArgument);
}

TEST(Table, MarkdownAndFormats) {
    Table t{"Values", {"C", "x|y"}, {}};
    t.add_row({"24", "a|b"});
    EXPECT_EQ(render_markdown(t), "### Values\n\n| C | x\\|y |\n|---|---|\n| 24 | a\\|b |\n");
    auto j = table_json(t);
    EXPECT_EQ(j["rows"][0]["x|y"], "a|b");
    EXPECT_EQ(parse_format("md"), Format::markdown);
    EXPECT_EQ(extension(Format::csv), "csv");
    EXPECT_THROW(parse_format("xml"), ParseError);
}
