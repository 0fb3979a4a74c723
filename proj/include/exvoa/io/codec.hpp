/**
 * @file codec.hpp
 * @brief JSON encoding of the library's values (nlohmann::json).
 *
 * Scalars are "p/q" strings, never floating point. Polynomials in C and
 * rational functions list coefficients low to high. Every encoder has a
 * matching decoder so documents round-trip.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "exvoa/correlators/correlators.hpp"
#include "exvoa/liechar/characters.hpp"
#include "exvoa/mde/solver.hpp"
#include "exvoa/virasoro/module.hpp"

namespace exvoa::io {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }
inline json to_json(const Integer& z) { return z.get_str(); }

inline json to_json(const PolyQ& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

inline json to_json(const RatFunc& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

/// Polynomial in d over Q(C): array of rational functions by power of d.
inline json to_json(const DPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

template <class F>
json to_json(const QSeries<F>& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return json{{"lead", to_json(s.lead())}, {"coeffs", coeffs}, {"trunc", s.trunc()}};
}

template <class F>
json to_json(const VirasoroVector<F>& v) {
    json terms = json::object();
    for (const auto& [p, c] : v.terms()) terms[partition_key(p)] = to_json(c);
    return json{{"level", v.level()}, {"terms", terms}};
}

inline json to_json(const CasimirCoefficientReport& r) {
    json a = json::array();
    for (const auto& c : r)
        a.push_back(json{{"n", c.n}, {"c", json{{"S", to_json(c.S)}, {"K", to_json(c.K)}}}, {"pure", c.pure}});
    return a;
}

template <class F>
json to_json(const MDESolution<F>& s) {
    json coeffs = json::array(), roots = json::array();
    for (const auto& c : s.series.coeffs()) coeffs.push_back(to_json(c));
    for (const auto& r : s.indicial_roots) roots.push_back(to_json(r));
    return json{{"lead", to_json(s.lead())},
                {"coeffs", coeffs},
                {"resonances", s.resonances},
                {"indicialRoots", roots},
                {"residualVerified", s.residual_verified}};
}

inline json to_json(const ScanVerdict& v) {
    json j{{"C", to_json(v.C)}, {"pass", v.pass}, {"firstFailure", nullptr}};
    if (v.first_failure) j["firstFailure"] = json{{"n", v.first_failure->n}, {"value", to_json(v.first_failure->value)}};
    if (v.error) j["error"] = *v.error;
    return j;
}

inline json to_json(const Laurent& chi) {
    json terms = json::object();
    for (const auto& [e, c] : chi.terms()) {
        // characters are integral; anything else keeps the "p/q" form
        if (c.is_integer() && c.num().fits_slong_p()) terms[partition_key(e)] = c.num().get_si();
        else terms[partition_key(e)] = to_json(c);
    }
    return json{{"vars", chi.vars()}, {"terms", terms}};
}

// ---- decoding ----

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

inline PolyQ polyq_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return PolyQ(std::move(c));
}

inline RatFunc ratfunc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("expected {num, den}");
    return RatFunc(polyq_from_json(j.at("num")), polyq_from_json(j.at("den")));
}

inline DPoly dpoly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rational functions");
    std::vector<RatFunc> c;
    for (const auto& x : j) c.push_back(ratfunc_from_json(x));
    return DPoly(std::move(c));
}

template <class F>
F scalar_from_json(const json& j) {
    if constexpr (std::is_same_v<F, Rational>) return rational_from_json(j);
    else return ratfunc_from_json(j);
}

template <class F>
QSeries<F> qseries_from_json(const json& j) {
    std::vector<F> c;
    for (const auto& x : j.at("coeffs")) c.push_back(scalar_from_json<F>(x));
    QSeries<F> s(scalar_from_json<F>(j.at("lead")), std::move(c));
    if (j.contains("trunc") && j.at("trunc").get<int>() != s.trunc()) throw ParseError("trunc does not match coeffs");
    return s;
}

inline Partition partition_from_key(const std::string& key) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') throw ParseError("bad partition key " + key);
    Partition p;
    std::string body = key.substr(1, key.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw ParseError("bad partition key " + key);
            p.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad partition key " + key);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return p;
}

template <class F>
VirasoroVector<F> virasoro_vector_from_json(const json& j) {
    VirasoroVector<F> v(j.at("level").get<int>());
    for (const auto& [k, c] : j.at("terms").items()) v.add(partition_from_key(k), scalar_from_json<F>(c));
    return v;
}

inline CasimirCoefficientReport casimir_report_from_json(const json& j) {
    CasimirCoefficientReport r;
    for (const auto& x : j) {
        CasimirCoefficient c;
        c.n = x.at("n").get<int>();
        c.S = dpoly_from_json(x.at("c").at("S"));
        c.K = dpoly_from_json(x.at("c").at("K"));
        c.pure = x.at("pure").get<bool>();
        r.push_back(std::move(c));
    }
    return r;
}

template <class F>
MDESolution<F> mde_solution_from_json(const json& j) {
    MDESolution<F> s;
    std::vector<F> c;
    for (const auto& x : j.at("coeffs")) c.push_back(scalar_from_json<F>(x));
    s.series = QSeries<F>(scalar_from_json<F>(j.at("lead")), std::move(c));
    s.resonances = j.at("resonances").get<std::vector<int>>();
    if (j.contains("indicialRoots"))
        for (const auto& x : j.at("indicialRoots")) s.indicial_roots.push_back(scalar_from_json<F>(x));
    if (j.contains("residualVerified")) s.residual_verified = j.at("residualVerified").get<bool>();
    return s;
}

inline ScanVerdict scan_verdict_from_json(const json& j) {
    ScanVerdict v;
    v.C = rational_from_json(j.at("C"));
    v.pass = j.at("pass").get<bool>();
    if (!j.at("firstFailure").is_null())
        v.first_failure = ScanFailure{j.at("firstFailure").at("n").get<int>(), rational_from_json(j.at("firstFailure").at("value"))};
    if (j.contains("error")) v.error = j.at("error").get<std::string>();
    return v;
}

inline Laurent laurent_from_json(const json& j) {
    Laurent chi(j.at("vars").get<int>());
    for (const auto& [k, c] : j.at("terms").items())
        chi.add(partition_from_key(k), c.is_number_integer() ? Rational(c.get<long>()) : rational_from_json(c));
    return chi;
}

}  // namespace exvoa::io
