/**
 * @file app.hpp
 * @brief The exvoa command line: argument parsing, dispatch and report output.
 *
 * Exit codes: 0 success, 1 a verification or domain check failed,
 * 2 usage error, 3 internal inconsistency.
 *
 * Environment: VOA_OUT_DIR (default directory for `report all`),
 * VOA_THREADS (worker threads), VOA_FAULT_INJECT=residual (corrupts a
 * solved series before its residual check; exercises exit code 3).
 */
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exvoa/classify/classify.hpp"
#include "exvoa/correlators/correlators.hpp"
#include "exvoa/io/codec.hpp"
#include "exvoa/io/table.hpp"
#include "exvoa/liechar/characters.hpp"
#include "exvoa/mde/solver.hpp"
#include "exvoa/virasoro/casimir.hpp"

namespace exvoa::cli {

inline constexpr const char* tool_name = "exvoa";
inline constexpr const char* tool_version = "0.1.0";

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, internal_error = 3 };

struct Environment {
    std::optional<std::string> out_dir;
    unsigned threads = 1;
    bool fault_residual = false;

    static Environment from_process() {
        Environment env;
        if (const char* d = std::getenv("VOA_OUT_DIR"); d && *d) env.out_dir = d;
        env.threads = std::max(1u, std::thread::hardware_concurrency());
        if (const char* t = std::getenv("VOA_THREADS"); t && *t) {
            try {
                env.threads = static_cast<unsigned>(std::max(1, std::stoi(t)));
            } catch (const std::logic_error&) {
                throw ParseError(std::string("VOA_THREADS must be a positive integer, got '") + t + "'");
            }
        }
        if (const char* f = std::getenv("VOA_FAULT_INJECT"); f && std::string(f) == "residual") env.fault_residual = true;
        return env;
    }
};

/// What a command produced: a typed JSON body, its tabular view, and any
/// expectation that did not hold.
struct Result {
    json body;
    std::vector<io::Table> tables;
    std::vector<std::string> failures;
};

namespace detail {

inline std::string str(const Rational& r) { return r.to_string(); }
inline std::string str(const Integer& z) { return z.get_str(); }
inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError&) {
        throw ParseError(flag + " expects an exact rational p/q, got '" + text + "'");
    } catch (const DivisionByZero&) {
        throw ParseError(flag + " has a zero denominator: '" + text + "'");
    }
}

inline bool contains(const std::vector<Rational>& v, const Rational& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

inline std::string weight_str(const Weight& w) { return partition_key(w); }

}  // namespace detail

// ---- commands ----

inline Result cmd_enumerate_lie(bool all) {
    using namespace detail;
    Result r;
    auto cands = enumerate_lie_C();
    std::vector<Rational> all_C;
    for (const auto& c : cands) all_C.push_back(c.C);
    io::Table t{"Central charges with d1 a positive integer", {"C", "d1", "m", "C*", "provenance"}, {}};
    json values = json::array();
    std::vector<Rational> positive;
    for (const auto& c : cands) {
        Rational star = involution_C(c.C);
        if (!contains(all_C, star)) r.failures.push_back("C* = " + str(star) + " of C = " + str(c.C) + " is not listed");
        if (c.C.sign() > 0) positive.push_back(c.C);
        if (!all && c.C.sign() <= 0) continue;
        const bool listed = contains(reference::lie_positive_C(), c.C);
        const char* prov = listed ? reference::paper : reference::derived;
        values.push_back(json{{"C", str(c.C)}, {"d1", str(c.d1)}, {"m", str(c.m)}, {"Cstar", str(star)}, {"provenance", prov}});
        t.add_row({str(c.C), str(c.d1), str(c.m), str(star), prov});
    }
    if (positive != reference::lie_positive_C())
        r.failures.push_back("positive values differ from the embedded list of " +
                             std::to_string(reference::lie_positive_C().size()));
    r.body = json{{"family", "lie"}, {"count", values.size()}, {"values", values}};
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_enumerate_griess(EnumerationMode mode, std::optional<long> window) {
    using namespace detail;
    Result r;
    auto cands = enumerate_griess_C(mode, window);
    io::Table t{"Central charges with p2 a positive integer", {"C", "p2", "provenance"}, {}};
    json values = json::array();
    std::vector<Rational> found;
    for (const auto& c : cands) {
        found.push_back(c.C);
        const char* prov = contains(reference::griess_C(), c.C) ? reference::paper : reference::derived;
        values.push_back(json{{"C", str(c.C)}, {"p2", str(c.p2)}, {"provenance", prov}});
        t.add_row({str(c.C), str(c.p2), prov});
    }
    if (found != reference::griess_C())
        r.failures.push_back("enumeration differs from the embedded list of " +
                             std::to_string(reference::griess_C().size()));
    r.body = json{{"family", "griess"},
                  {"mode", mode == EnumerationMode::verify ? "verify" : "exhaustive"},
                  {"window", mode == EnumerationMode::verify ? json(nullptr) : json(window.value_or(griess_window_bound()))},
                  {"count", values.size()},
                  {"values", values}};
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_classify_deligne() {
    using namespace detail;
    Result r;
    io::Table t{"Level-one matches for the positive Lie central charges",
                {"C", "d1", "hdual", "algebra", "level", "provenance"}, {}};
    json rows = json::array();
    std::vector<std::pair<Rational, std::string>> level_one;
    for (const auto& C : reference::lie_positive_C()) {
        auto m = match_deligne(C);
        json matches = json::array();
        for (const auto& x : m.matches) {
            matches.push_back(json{{"algebra", x.algebra.name}, {"level", x.level}});
            if (x.level == 1) level_one.emplace_back(C, x.algebra.name);
        }
        std::vector<std::string> names, levels;
        for (const auto& x : m.matches) {
            names.push_back(x.algebra.name);
            levels.push_back(std::to_string(x.level));
        }
        bool in_series = false;
        for (const auto& e : reference::deligne_series()) in_series |= e.C == C;
        const char* prov = in_series ? reference::paper : reference::derived;
        rows.push_back(json{{"C", str(C)}, {"d1", str(m.d1)}, {"hdual", str(m.h_dual)}, {"matches", matches},
                            {"provenance", prov}});
        t.add_row({str(C), str(m.d1), str(m.h_dual), join(names, " "), join(levels, " "), prov});
    }
    std::vector<std::pair<Rational, std::string>> expected;
    for (const auto& e : reference::deligne_series()) expected.emplace_back(e.C, e.algebra);
    if (level_one != expected) r.failures.push_back("level-one matches differ from the embedded Deligne series");
    r.body = json{{"rows", rows}};
    r.tables.push_back(std::move(t));
    return r;
}

struct SolveOptions {
    Family family = Family::lie;
    std::optional<Rational> C;
    bool symbolic = false;
    int order = 10;
    std::map<int, Rational> prescribe;
};

template <class F>
Result solve_report(const SolveOptions& o, const F& C, const Environment& env) {
    using namespace detail;
    const auto ode = o.family == Family::lie ? build_lie_mde() : build_griess_mde();
    std::map<int, F> pre;
    if (o.family == Family::griess) pre[1] = F(0);
    for (const auto& [n, v] : o.prescribe) pre[n] = F(v);
    auto sol = solve_mde<F>(ode, C, vacuum_exponent(C), pre, o.order);
    if (env.fault_residual) {
        auto coeffs = sol.series.coeffs();
        coeffs.back() += F(1);
        sol.series = QSeries<F>(sol.series.lead(), std::move(coeffs));
        sol.residual_verified = mde_residual(ode, C, sol.series).is_zero();
    }
    if (!sol.residual_verified)
        throw InternalInconsistency("the solved series does not satisfy the differential equation through order " +
                                    std::to_string(o.order));
    Result r;
    r.body = io::to_json(sol);
    r.body["family"] = to_string(o.family);
    r.body["C"] = o.symbolic ? json("C") : json(str(*o.C));
    r.body["order"] = o.order;
    io::Table t{"Coefficients of q^(lead+n)", {"n", "a_n"}, {}};
    for (int n = 0; n <= o.order; ++n) t.add_row({std::to_string(n), sol.series.coeff(n).to_string()});
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_solve_mde(const SolveOptions& o, const Environment& env) {
    if (o.order < 0) throw InvalidArgument("--order must be non-negative");
    if (o.symbolic) return solve_report<RatFunc>(o, RatFunc::C(), env);
    return solve_report<Rational>(o, *o.C, env);
}

inline std::vector<Rational> read_expected_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read expected list " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("expected list " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_array()) throw ParseError("expected list must be a JSON array of \"p/q\" strings");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(io::rational_from_json(x));
    std::sort(out.begin(), out.end());
    return out;
}

inline Result cmd_scan(Family family, int order, const std::optional<std::string>& expected_path, unsigned threads) {
    using namespace detail;
    if (order < 1) throw InvalidArgument("--order must be at least 1");
    std::vector<Rational> cands;
    std::vector<std::string> p2;
    std::optional<std::vector<Rational>> expected;
    if (family == Family::griess) {
        for (const auto& c : enumerate_griess_C()) {
            cands.push_back(c.C);
            p2.push_back(str(c.p2));
        }
        std::vector<Rational> ref;
        for (const auto& s : reference::griess_survivors()) ref.push_back(s.C);
        expected = ref;
    } else {
        for (const auto& C : reference::lie_positive_C()) {
            cands.push_back(C);
            p2.push_back(str(d1_formula()(C)));
        }
    }
    if (expected_path) expected = read_expected_file(*expected_path);

    auto verdicts = integrality_scan(family, cands, order, threads);
    Result r;
    io::Table t{"Integrality scan", {"C", family == Family::griess ? "p2" : "d1", "pass", "first failure n",
                                     "first failure value", "provenance"}, {}};
    json vj = json::array(), surv = json::array();
    std::vector<Rational> survivors;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto& v = verdicts[i];
        if (v.error) throw InternalInconsistency("scan of C = " + str(v.C) + " failed: " + *v.error);
        json j = io::to_json(v);
        j[family == Family::griess ? "p2" : "d1"] = p2[i];
        vj.push_back(j);
        if (v.pass) {
            survivors.push_back(v.C);
            surv.push_back(str(v.C));
        }
        const bool listed = expected && contains(*expected, v.C);
        t.add_row({str(v.C), p2[i], yes_no(v.pass), v.first_failure ? std::to_string(v.first_failure->n) : "",
                   v.first_failure ? str(v.first_failure->value) : "", listed ? reference::paper : reference::derived});
    }
    r.body = json{{"family", to_string(family)}, {"order", order}, {"verdicts", vj}, {"survivors", surv}};
    if (expected) {
        json ej = json::array();
        for (const auto& c : *expected) ej.push_back(str(c));
        r.body["expected"] = ej;
        r.body["agrees"] = survivors == *expected;
        if (survivors != *expected)
            r.failures.push_back("survivors (" + std::to_string(survivors.size()) + ") differ from the expected list (" +
                                 std::to_string(expected->size()) + ")");
    }
    r.tables.push_back(std::move(t));
    return r;
}

/// Survivors only, in the layout of the published nine-case list.
inline Result cmd_survivor_table(int order, unsigned threads) {
    using namespace detail;
    auto res = griess_survivors(order, threads);
    Result r;
    io::Table t{"Survivors of the integrality scan", {"C", "p2", "provenance"}, {}};
    json rows = json::array();
    std::vector<std::pair<Rational, long>> got, want;
    for (const auto& s : res) {
        rows.push_back(json{{"C", str(s.C)}, {"p2", str(s.p2)}, {"provenance", reference::paper}});
        t.add_row({str(s.C), str(s.p2), reference::paper});
        got.emplace_back(s.C, s.p2.get_si());
    }
    for (const auto& s : reference::griess_survivors()) want.emplace_back(s.C, s.p2);
    if (got != want) r.failures.push_back("survivors differ from the embedded nine-case list");
    r.body = json{{"order", order}, {"survivors", rows}};
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_kac(int level) {
    using namespace detail;
    if (level < 2) throw InvalidArgument("--level must be at least 2");
    if (level > 14) throw InvalidArgument("--level above 14 is not supported");
    PolyQ det = kac_determinant(level);
    auto zeros = kac_zeros(level);
    auto roots = rational_roots(det);
    Result r;
    io::Table t{"Zeros of det M_" + std::to_string(level) + "(C,0)", {"p", "q", "(p-1)(q-1)", "C", "det vanishes"}, {}};
    json pairs = json::array();
    for (int p = 2; p <= level + 1; ++p)
        for (int q = p + 1; (p - 1) * (q - 1) <= level; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Rational c = Rational(1) - Rational(6L * (p - q) * (p - q), static_cast<long>(p) * q);
            const bool vanishes = det(c).is_zero();
            if (!vanishes) r.failures.push_back("det does not vanish at C_{" + std::to_string(p) + "," + std::to_string(q) + "}");
            pairs.push_back(json{{"p", p}, {"q", q}, {"C", str(c)}, {"vanishes", vanishes}});
            t.add_row({std::to_string(p), std::to_string(q), std::to_string((p - 1) * (q - 1)), str(c), yes_no(vanishes)});
        }
    if (roots != zeros) r.failures.push_back("rational roots of the determinant differ from the Kac zero set");
    json zj = json::array(), rj = json::array();
    for (const auto& z : zeros) zj.push_back(str(z));
    for (const auto& z : roots) rj.push_back(str(z));
    r.body = json{{"level", level},
                  {"basisSize", vacuum_basis(level).size()},
                  {"determinant", io::to_json(det)},
                  {"zeros", zj},
                  {"determinantRoots", rj},
                  {"pairs", pairs}};
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_casimir(int weight, int n, const std::optional<Rational>& C) {
    using namespace detail;
    if (weight < 1) throw InvalidArgument("--weight must be at least 1");
    if (n < 2 || n > 10) throw InvalidArgument("--n must lie in 2..10");
    Result r;
    io::Table t{"Casimir vectors lambda^(j) per unit of d, weight " + std::to_string(weight),
                {"level", "partition", "coefficient"}, {}};
    json chain = json::array();
    auto fill = [&](const auto& sol) {
        if (!sol.relations_verified)
            throw InternalInconsistency("Casimir chain violates its defining mode relations");
        for (const auto& v : sol.chain) {
            chain.push_back(io::to_json(v));
            for (const auto& [p, c] : v.terms()) t.add_row({std::to_string(v.level()), partition_key(p), c.to_string()});
        }
        r.body = json{{"weight", weight},
                      {"level", n},
                      {"C", C ? json(str(*C)) : json("C")},
                      {"rank", sol.rank},
                      {"size", sol.size},
                      {"relationsVerified", sol.relations_verified},
                      {"chain", chain}};
    };
    if (C) fill(solve_casimir<Rational>(weight, n, *C));
    else {
        fill(solve_casimir<RatFunc>(weight, n, RatFunc::C()));
        json locus = json::array();
        for (const auto& z : rational_roots(casimir_singular_locus(n))) locus.push_back(str(z));
        r.body["singularAt"] = locus;
    }
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_dims_deligne(const std::optional<Rational>& C) {
    using namespace detail;
    Result r;
    io::Table t{"Deligne dimension suite", {"C", "d1", "hdual", "vogel", "dimY", "C*", "dimY*", "symOK", "provenance"}, {}};
    json rows = json::array();
    std::vector<Rational> Cs;
    if (C) Cs.push_back(*C);
    else
        for (const auto& e : reference::deligne_series()) Cs.push_back(e.C);
    for (const auto& c : Cs) {
        auto d = deligne_dims(c);
        bool in_series = false;
        for (const auto& e : reference::deligne_series()) in_series |= e.C == c;
        const char* prov = in_series ? reference::paper : reference::derived;
        if (!d.sym_ok && !C) r.failures.push_back("symOK fails at C = " + str(c));
        if (!(d.vogel_dim == d.d1) && !C) r.failures.push_back("Vogel dimension differs from d1 at C = " + str(c));
        rows.push_back(json{{"C", str(c)}, {"d1", str(d.d1)}, {"hdual", str(d.h_dual)}, {"vogelDim", str(d.vogel_dim)},
                            {"dimY", str(d.dimY)}, {"Cstar", str(d.C_star)}, {"dimYstar", str(d.dimY_star)},
                            {"symOK", d.sym_ok}, {"provenance", prov}});
        t.add_row({str(c), str(d.d1), str(d.h_dual), str(d.vogel_dim), str(d.dimY), str(d.C_star), str(d.dimY_star),
                   yes_no(d.sym_ok), prov});
    }
    r.body = json{{"suite", "deligne"}, {"rows", rows}};
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_dims_griess(const std::optional<Rational>& C) {
    using namespace detail;
    Result r;
    io::Table t{"Weight-two dimension suite", {"C", "p2", "p3", "dimY", "antiOK", "group", "provenance"}, {}};
    json rows = json::array();
    auto emit = [&](const Rational& c, const reference::AtlasRow* atlas) {
        auto s = griess_p3_suite(c);
        json row{{"C", str(c)}, {"p2", str(s.p2)}, {"p3", str(s.p3)}, {"dimY", str(s.dimYanti)}, {"antiOK", s.anti_ok}};
        std::string group;
        if (atlas) {
            group = atlas->group;
            const bool match = s.p2 == Rational(atlas->p2) && s.p3 == Rational(atlas->p3) && s.dimYanti == Rational(atlas->dimY);
            row["group"] = group;
            row["atlasMatch"] = match;
            if (!match) r.failures.push_back("Atlas degrees differ at C = " + str(c));
            if (!s.anti_ok) r.failures.push_back("antiOK fails at C = " + str(c));
        }
        const char* prov = atlas ? reference::paper : reference::derived;
        row["provenance"] = prov;
        rows.push_back(row);
        t.add_row({str(c), str(s.p2), str(s.p3), str(s.dimYanti), yes_no(s.anti_ok), group, prov});
    };
    if (C) {
        const reference::AtlasRow* hit = nullptr;
        for (const auto& a : reference::atlas_table())
            if (a.C == *C) hit = &a;
        emit(*C, hit);
    } else {
        for (const auto& a : reference::atlas_table()) emit(a.C, &a);
    }
    r.body = json{{"suite", "griess"}, {"rows", rows}};
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_dims_higher(std::optional<int> k, const std::optional<Rational>& C) {
    using namespace detail;
    Result r;
    io::Table t{"Higher lowest weight", {"k", "C", "p_k", "integral", "printed", "agrees", "provenance"}, {}};
    json rows = json::array();
    auto emit = [&](int kk, const Rational& c, const reference::HigherWeightValue* printed) {
        auto h = higher_weight_pk(kk, c);
        json row{{"k", kk}, {"C", str(c)}, {"value", str(h.value)}, {"integral", h.integral}};
        std::string printed_s, agrees_s;
        if (printed) {
            const bool agrees = printed->integral ? (h.integral && h.value == Rational(printed->value)) : !h.integral;
            printed_s = printed->integral ? std::to_string(printed->value) : "not integral";
            agrees_s = yes_no(agrees);
            row["printed"] = printed->integral ? json(std::to_string(printed->value)) : json(nullptr);
            row["agrees"] = agrees;
            if (!agrees)
                r.failures.push_back("p_" + std::to_string(kk) + "(" + str(c) + ") = " + str(h.value) +
                                     " differs from the printed " + printed_s);
        }
        const char* prov = printed ? reference::paper : reference::derived;
        row["provenance"] = prov;
        rows.push_back(row);
        t.add_row({std::to_string(kk), str(c), str(h.value), yes_no(h.integral), printed_s, agrees_s, prov});
    };
    if (C || k) {
        if (!C || !k) throw InvalidArgument("dims --suite higher needs both --k and --C, or neither");
        const reference::HigherWeightValue* hit = nullptr;
        for (const auto& v : reference::higher_weight_values())
            if (v.k == *k && v.C == *C) hit = &v;
        emit(*k, *C, hit);
    } else {
        for (const auto& v : reference::higher_weight_values()) emit(v.k, v.C, &v);
    }
    r.body = json{{"suite", "higher"}, {"rows", rows}};
    r.tables.push_back(std::move(t));
    return r;
}

inline Result cmd_chars(const std::string& algebra, const Rational& C) {
    using namespace detail;
    auto rs = root_system(algebra);
    auto chi1 = adjoint_character(rs);
    auto chi2 = chi2_from_chi1(rs, C);
    const bool inv = is_weyl_invariant(rs, chi2);
    const bool nonneg = chi2.is_nonnegative();
    std::vector<Weight> irr;
    if (!chi2.is_zero()) irr = find_irreducible(rs, chi2, 4);
    Result r;
    if (!inv) r.failures.push_back("chi_2 is not Weyl invariant");
    if (!nonneg) r.failures.push_back("chi_2 has negative coefficients");
    if (!chi2.is_zero() && irr.empty()) r.failures.push_back("chi_2 is not an irreducible character with highest weight <= 4");
    const Rational dimY = dimY_formula()(C);
    if (chi2.at_identity() != dimY) r.failures.push_back("chi_2 at the identity differs from dim Y(C)");
    json irrj = json::array();
    for (const auto& w : irr) irrj.push_back(w);
    r.body = json{{"algebra", rs.name},
                  {"C", str(C)},
                  {"chi1", io::to_json(chi1)},
                  {"chi2", io::to_json(chi2)},
                  {"dimension", str(chi2.at_identity())},
                  {"dimY", str(dimY)},
                  {"weylInvariant", inv},
                  {"irreducibleHighestWeights", irrj},
                  {"identityCheck", chi2_identity_check()}};
    io::Table t{"chi_1 and chi_2 for " + rs.name + " at C = " + str(C), {"exponent", "chi1", "chi2"}, {}};
    std::map<Weight, std::pair<Rational, Rational>> merged;
    for (const auto& [e, c] : chi1.terms()) merged[e].first = c;
    for (const auto& [e, c] : chi2.terms()) merged[e].second = c;
    for (const auto& [e, c] : merged) t.add_row({weight_str(e), str(c.first), str(c.second)});
    r.tables.push_back(std::move(t));
    return r;
}

// ---- rendering ----

inline std::string render(const Result& r, io::Format f, const std::vector<std::string>& command) {
    switch (f) {
        case io::Format::json: {
            ojson doc;
            doc["tool"] = tool_name;
            doc["version"] = tool_version;
            doc["command"] = command;
            doc["body"] = ojson::parse(r.body.dump());
            if (!r.failures.empty()) doc["failures"] = r.failures;
            return doc.dump(2) + "\n";
        }
        case io::Format::csv: {
            std::string out;
            for (std::size_t i = 0; i < r.tables.size(); ++i) out += (i ? "\r\n" : "") + io::render_csv(r.tables[i]);
            return out;
        }
        case io::Format::markdown: {
            std::string out;
            for (std::size_t i = 0; i < r.tables.size(); ++i) out += (i ? "\n" : "") + io::render_markdown(r.tables[i]);
            return out;
        }
    }
    return "";
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IOError("cannot write " + path.string());
    f << text;
    if (!f) throw IOError("write failed for " + path.string());
}

inline int exit_code_for(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidArgument*>(&e)) return usage_error;
    if (dynamic_cast<const InternalInconsistency*>(&e)) return internal_error;
    return verification_failed;
}

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::optional<Environment> env_override = std::nullopt);

namespace detail {

struct Artifact {
    std::string name;
    std::vector<std::string> command;
};

inline const std::vector<Artifact>& report_artifacts() {
    static const std::vector<Artifact> a = {
        {"lie_values", {"enumerate", "lie"}},
        {"deligne_matches", {"classify", "deligne"}},
        {"deligne_dims", {"dims", "--suite", "deligne"}},
        {"griess_values", {"enumerate", "griess"}},
        {"griess_survivors", {"survivors"}},
        {"atlas_table", {"dims", "--suite", "griess"}},
        {"higher_weight", {"dims", "--suite", "higher"}},
        {"kac_zeros_level2", {"kac", "--level", "2"}},
        {"kac_zeros_level4", {"kac", "--level", "4"}},
        {"kac_zeros_level6", {"kac", "--level", "6"}},
        {"kac_zeros_level8", {"kac", "--level", "8"}},
        {"kac_zeros_level10", {"kac", "--level", "10"}},
        {"kac_zeros_level12", {"kac", "--level", "12"}},
        {"casimir_weight1", {"casimir", "--weight", "1", "--n", "4"}},
        {"casimir_weight2", {"casimir", "--weight", "2", "--n", "6"}},
    };
    return a;
}

}  // namespace detail

/// Parses and executes a command, returning its result. Throws on error.
inline Result execute(const std::vector<std::string>& args, const Environment& env, io::Format& format,
                      std::optional<std::string>& out_path, bool& is_report, std::ostream& help_out, bool& help_shown);

inline Result report_all(const std::filesystem::path& dir, const Environment& env) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IOError("cannot create " + dir.string() + ": " + ec.message());
    Result summary;
    json files = json::array();
    io::Table t{"Report artifacts", {"artifact", "command", "files", "verified"}, {}};
    for (const auto& a : detail::report_artifacts()) {
        io::Format ignored = io::Format::json;
        std::optional<std::string> no_out;
        bool rep = false, help = false;
        std::ostringstream sink;
        Result r = execute(a.command, env, ignored, no_out, rep, sink, help);
        std::vector<std::string> written;
        for (auto f : {io::Format::json, io::Format::csv, io::Format::markdown}) {
            auto path = dir / (a.name + "." + io::extension(f));
            write_file(path, render(r, f, a.command));
            written.push_back(path.filename().string());
        }
        const bool verified = r.failures.empty();
        files.push_back(json{{"artifact", a.name}, {"command", a.command}, {"files", written}, {"verified", verified},
                             {"failures", r.failures}});
        t.add_row({a.name, detail::join(a.command, " "), detail::join(written, " "), detail::yes_no(verified)});
    }
    summary.body = json{{"artifacts", files}};
    summary.tables.push_back(std::move(t));
    return summary;
}

inline Result execute(const std::vector<std::string>& args, const Environment& env, io::Format& format,
                      std::optional<std::string>& out_path, bool& is_report, std::ostream& help_out, bool& help_shown) {
    CLI::App app{"Exact classification tools for vertex operator algebras with a single primary family", tool_name};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_s = "json", out_s;
    app.add_option("--format", format_s, "Output format")->check(CLI::IsMember({"json", "csv", "markdown"}));
    app.add_option("--out", out_s, "Output file (directory for `report all`)");
    app.set_version_flag("--version", tool_version);

    std::string family_s, mode_s = "verify", what;
    long window = 0;
    bool all = false, symbolic = false;
    std::string C_s, expected_s;
    int order = -1, level = 0, weight = 1, n = 0, k = 0;
    std::vector<std::string> prescribe;
    unsigned threads = 0;
    std::string suite, algebra;

    auto* en = app.add_subcommand("enumerate", "Admissible central charges for a family");
    en->add_option("family", family_s, "lie or griess")->required()->check(CLI::IsMember({"lie", "griess"}));
    auto* mode_opt = en->add_option("--mode", mode_s, "verify or exhaustive (griess)")->check(CLI::IsMember({"verify", "exhaustive"}));
    auto* window_opt = en->add_option("--window", window, "Search window |C| < B for exhaustive mode");
    en->add_flag("--all", all, "Include the negative Lie values");

    auto* cl = app.add_subcommand("classify", "Match central charges to simple Lie algebras");
    cl->add_option("what", what, "deligne")->required()->check(CLI::IsMember({"deligne"}));

    auto* so = app.add_subcommand("solve-mde", "Solve the family's modular differential equation");
    so->add_option("--family", family_s)->required()->check(CLI::IsMember({"lie", "griess"}));
    auto* c_opt = so->add_option("--C", C_s, "Central charge p/q");
    auto* sym_opt = so->add_flag("--symbolic", symbolic, "Solve over Q(C)");
    c_opt->excludes(sym_opt);
    so->add_option("--order", order, "Number of coefficients after the leading one (default 10)");
    so->add_option("--prescribe", prescribe, "Fix a coefficient at a resonance, n=v")->take_all();

    auto* sc = app.add_subcommand("scan", "Integrality scan over the family's candidates");
    sc->add_option("--family", family_s)->required()->check(CLI::IsMember({"lie", "griess"}));
    sc->add_option("--order", order, "Scan depth (default 400)");
    sc->add_option("--expected", expected_s, "JSON array of the expected surviving C values");
    sc->add_option("--threads", threads, "Worker threads (overrides VOA_THREADS)");

    auto* sv = app.add_subcommand("survivors", "Table of candidates passing the weight-two scan");
    sv->add_option("--order", order, "Scan depth (default 400)");

    auto* ka = app.add_subcommand("kac", "Kac determinant of the vacuum module and its zeros");
    ka->add_option("--level", level)->required();

    auto* ca = app.add_subcommand("casimir", "Casimir vectors lambda^(j) up to a level");
    ca->add_option("--weight", weight, "Lowest weight k")->required();
    ca->add_option("--n", n, "Top level")->required();
    ca->add_option("--C", C_s, "Fix the central charge (default symbolic)");

    auto* di = app.add_subcommand("dims", "Dimension formula suites");
    di->add_option("--suite", suite)->required()->check(CLI::IsMember({"deligne", "griess", "higher"}));
    di->add_option("--C", C_s, "Central charge p/q (default: the published rows)");
    di->add_option("--k", k, "Lowest weight for the higher suite");

    auto* ch = app.add_subcommand("chars", "chi_1 and chi_2 for a rank <= 2 algebra");
    ch->add_option("--algebra", algebra)->required();
    ch->add_option("--C", C_s)->required();

    auto* re = app.add_subcommand("report", "Regenerate every table as files");
    re->add_option("what", what, "all")->required()->check(CLI::IsMember({"all"}));

    std::vector<const char*> argv{tool_name};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        help_out << app.help();
        help_shown = true;
        return {};
    } catch (const CLI::CallForAllHelp&) {
        help_out << app.help("", CLI::AppFormatMode::All);
        help_shown = true;
        return {};
    } catch (const CLI::CallForVersion&) {
        help_out << tool_version << "\n";
        help_shown = true;
        return {};
    } catch (const CLI::ParseError& e) {
        throw ParseError(e.what());
    }

    format = io::parse_format(format_s);
    if (!out_s.empty()) out_path = out_s;
    auto opt_C = [&](const char* flag) -> std::optional<Rational> {
        if (C_s.empty()) return std::nullopt;
        return detail::parse_rational_flag(flag, C_s);
    };

    if (en->parsed()) {
        if (family_s == "lie") {
            if (mode_opt->count() || window_opt->count()) throw InvalidArgument("--mode and --window apply to griess only");
            return cmd_enumerate_lie(all);
        }
        if (all) throw InvalidArgument("--all applies to lie only");
        const auto mode = mode_s == "verify" ? EnumerationMode::verify : EnumerationMode::exhaustive;
        if (mode == EnumerationMode::verify && window_opt->count()) throw InvalidArgument("--window needs --mode exhaustive");
        return cmd_enumerate_griess(mode, window_opt->count() ? std::optional<long>(window) : std::nullopt);
    }
    if (cl->parsed()) return cmd_classify_deligne();
    if (so->parsed()) {
        SolveOptions o;
        o.family = parse_family(family_s);
        o.symbolic = symbolic;
        if (!symbolic) {
            if (C_s.empty()) throw InvalidArgument("solve-mde needs --C or --symbolic");
            o.C = detail::parse_rational_flag("--C", C_s);
        }
        o.order = order < 0 ? 10 : order;
        for (const auto& p : prescribe) {
            auto eq = p.find('=');
            if (eq == std::string::npos) throw ParseError("--prescribe expects n=v, got '" + p + "'");
            int idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoi(p.substr(0, eq), &used);
                if (used != eq) throw std::invalid_argument("trailing");
            } catch (const std::logic_error&) {
                throw ParseError("--prescribe expects an integer index, got '" + p + "'");
            }
            o.prescribe[idx] = detail::parse_rational_flag("--prescribe", p.substr(eq + 1));
        }
        return cmd_solve_mde(o, env);
    }
    if (sc->parsed()) {
        return cmd_scan(parse_family(family_s), order < 0 ? 400 : order,
                        expected_s.empty() ? std::nullopt : std::optional<std::string>(expected_s),
                        threads ? threads : env.threads);
    }
    if (sv->parsed()) return cmd_survivor_table(order < 0 ? 400 : order, env.threads);
    if (ka->parsed()) return cmd_kac(level);
    if (ca->parsed()) return cmd_casimir(weight, n, opt_C("--C"));
    if (di->parsed()) {
        if (suite == "deligne") return cmd_dims_deligne(opt_C("--C"));
        if (suite == "griess") return cmd_dims_griess(opt_C("--C"));
        return cmd_dims_higher(di->count("--k") ? std::optional<int>(k) : std::nullopt, opt_C("--C"));
    }
    if (ch->parsed()) return cmd_chars(algebra, detail::parse_rational_flag("--C", C_s));
    if (re->parsed()) {
        is_report = true;
        std::filesystem::path dir = !out_s.empty() ? out_s : env.out_dir.value_or("");
        if (dir.empty()) throw InvalidArgument("report all needs --out <dir> or VOA_OUT_DIR");
        out_path.reset();
        return report_all(dir, env);
    }
    throw InvalidArgument("no command given");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::optional<Environment> env_override) {
    try {
        const Environment env = env_override ? *env_override : Environment::from_process();
        io::Format format = io::Format::json;
        std::optional<std::string> out_path;
        bool is_report = false, help = false;
        Result r = execute(args, env, format, out_path, is_report, out, help);
        if (help) return ok;
        const std::string text = render(r, format, args);
        if (out_path) write_file(*out_path, text);
        else out << text;
        for (const auto& f : r.failures) err << "error[verification]: " << f << "\n";
        return r.failures.empty() ? ok : verification_failed;
    } catch (const Error& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << "\n";
        return internal_error;
    }
}

}  // namespace exvoa::cli
