/**
 * @file classify.hpp
 * @brief Enumeration of admissible central charges and the dimension suites.
 *
 * Lie family: d_1 = C(5C+22)/(10-C) is a positive integer exactly when
 * 5C^2 + (22+d_1)C - 10 d_1 = 0 has rational roots, i.e. when
 * d_1^2 + 244 d_1 + 484 = m^2, i.e. (d_1+122-m)(d_1+122+m) = 14400.
 *
 * Griess family: 70C^3 + 953C^2 + 2498C - 1496 = 2 p_2 (C^2 - 55C + 748).
 * For C = r/s in lowest terms, reducing mod s gives s | 70. Dividing out,
 * 2 p_2 = 70C + 4803 + R(C) with R(C) = (214303C - 3594140)/(C^2 - 55C + 748),
 * and 70C is an integer, so R(C) must be an integer; |R(C)| < 1 and R != 0
 * outside a window |C| < B, which bounds the search.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "exvoa/classify/formulas.hpp"
#include "exvoa/classify/reference.hpp"
#include "exvoa/error.hpp"
#include "exvoa/liechar/lie_table.hpp"
#include "exvoa/mde/solver.hpp"

namespace exvoa {

struct LieCandidate {
    Rational C;
    Integer d1;
    Integer m;  // sqrt(d1^2 + 244 d1 + 484)
};

/// All 42 rational C with d_1(C) a positive integer, ascending.
inline std::vector<LieCandidate> enumerate_lie_C() {
    std::vector<LieCandidate> out;
    const long N = 14400;
    for (long u = 1; u * u <= N; ++u) {
        if (N % u) continue;
        const long v = N / u;
        if ((u + v) % 2) continue;
        const long d1 = (u + v) / 2 - 122;
        const long m = (v - u) / 2;
        if (d1 <= 0) continue;
        for (long sgn : {1L, -1L}) {
            Rational C(-(22 + d1) + sgn * m, 10L);
            out.push_back({C, Integer(d1), Integer(m)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.C < b.C; });
    return out;
}

struct LieMatch {
    LieAlgebraRecord algebra;
    long level;
};

struct DeligneMatch {
    Rational C;
    Integer d1;
    Rational h_dual;
    std::vector<LieMatch> matches;
};

/// Simple algebras of dimension d_1 whose dual Coxeter number is level * (d_1/C - 1).
inline DeligneMatch match_deligne(const Rational& C) {
    const auto& list = reference::lie_positive_C();
    if (std::find(list.begin(), list.end(), C) == list.end())
        throw NotInList("C = " + C.to_string() + " is not one of the 21 positive Lie central charges");
    DeligneMatch out;
    out.C = C;
    Rational d1 = d1_formula()(C);
    out.d1 = d1.num();
    out.h_dual = d1 / C - Rational(1);
    for (const auto& rec : lie_table_lookup(out.d1.get_si())) {
        Rational level = Rational(rec.h_dual) / out.h_dual;
        if (level.is_integer() && level.sign() > 0) out.matches.push_back({rec, level.num().get_si()});
    }
    return out;
}

struct DeligneDims {
    Rational C;
    Rational d1;
    Rational h_dual;
    Rational vogel_dim;
    Rational dimY;
    Rational C_star;
    Rational dimY_star;
    bool sym_ok = false;
};

inline DeligneDims deligne_dims(const Rational& C) {
    if (C.is_zero()) throw PoleError("the Deligne suite is undefined at C = 0");
    DeligneDims d;
    d.C = C;
    d.d1 = d1_formula()(C);
    d.h_dual = hdual_formula()(C);
    d.vogel_dim = vogel_formula()(d.h_dual);
    d.dimY = dimY_formula()(C);
    d.C_star = involution_C(C);
    d.dimY_star = dimY_formula()(d.C_star);
    d.sym_ok = Rational(1) + d.dimY + d.dimY_star == d.d1 * (d.d1 + Rational(1)) / Rational(2);
    return d;
}

struct GriessCandidate {
    Rational C;
    Integer p2;
};

enum class EnumerationMode { verify, exhaustive };

/// Smallest integer B such that |R(C)| < 1 for every real |C| >= B.
inline long griess_window_bound() {
    // C > 0: C^2 - 214358 C + 3594888 > 0;  C < 0: C^2 + 214248 C - 3593392 > 0
    auto larger_root_ceiling = [](long b, long c) {
        // largest root of x^2 + b x + c, rounded up
        Integer disc = Integer(b) * b - Integer(4) * c;
        Integer s = sqrt(disc);
        if (s * s < disc) s += 1;
        Integer num = -Integer(b) + s;
        Integer r = num / 2 + (num % 2 != 0 ? 1 : 0);
        return r.get_si();
    };
    long pos = larger_root_ceiling(-214358, 3594888);
    long neg = larger_root_ceiling(-214248, -3593392);  // mirror of the negative side: x -> -x
    return std::max(pos, neg) + 1;
}

namespace detail {

inline std::optional<Integer> griess_p2_if_integral(const Rational& C) {
    Rational p2 = p2_griess_formula()(C);
    if (!p2.is_integer() || p2.sign() <= 0) return std::nullopt;
    return p2.num();
}

}  // namespace detail

/// The 37 rational C with p_2 a positive integer, ascending.
/// verify: checks the published list. exhaustive: searches C = r/s, s | 70, |C| < window.
inline std::vector<GriessCandidate> enumerate_griess_C(EnumerationMode mode = EnumerationMode::verify,
                                                       std::optional<long> window = std::nullopt) {
    std::vector<GriessCandidate> out;
    if (mode == EnumerationMode::verify) {
        for (const auto& C : reference::griess_C()) {
            auto p2 = detail::griess_p2_if_integral(C);
            if (!p2) throw InvalidArgument("listed C = " + C.to_string() + " does not give a positive integral p_2");
            out.push_back({C, *p2});
        }
    } else {
        const long bound = griess_window_bound();
        const long B = window.value_or(bound);
        if (B < bound)
            throw WindowTooSmall("window " + std::to_string(B) + " is below the derived bound " + std::to_string(bound));
        using i128 = __int128;
        for (long s : {1L, 2L, 5L, 7L, 10L, 14L, 35L, 70L}) {
            for (long r = -B * s; r <= B * s; ++r) {
                if (std::gcd(r, s) != 1) continue;
                const i128 R = r, S = s;
                const i128 num = (5 * R + 22 * S) * (2 * R - S) * (7 * R + 68 * S);
                const i128 den = 2 * S * (R * R - 55 * R * S + 748 * S * S);
                if (num % den != 0) continue;
                if ((num / den) <= 0) continue;
                Rational C(r, s);
                out.push_back({C, *detail::griess_p2_if_integral(C)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.C < b.C; });
    return out;
}

struct GriessSurvivorResult {
    Rational C;
    Integer p2;
    ScanVerdict verdict;
};

/// Integrality scan through order N over the 37 candidates; returns every verdict.
inline std::vector<GriessSurvivorResult> griess_scan(int N = 400, unsigned threads = 1) {
    auto cands = enumerate_griess_C();
    std::vector<Rational> Cs;
    for (const auto& c : cands) Cs.push_back(c.C);
    auto verdicts = integrality_scan(Family::griess, Cs, N, threads);
    std::vector<GriessSurvivorResult> out;
    for (std::size_t i = 0; i < cands.size(); ++i) out.push_back({cands[i].C, cands[i].p2, verdicts[i]});
    return out;
}

/// Only the candidates that pass.
inline std::vector<GriessSurvivorResult> griess_survivors(int N = 400, unsigned threads = 1) {
    auto all = griess_scan(N, threads);
    std::vector<GriessSurvivorResult> out;
    for (auto& r : all)
        if (r.verdict.pass) out.push_back(std::move(r));
    return out;
}

struct GriessP3Suite {
    Rational C;
    Rational p2;
    Rational p3;
    Rational dimYanti;
    bool anti_ok = false;
};

inline GriessP3Suite griess_p3_suite(const Rational& C) {
    GriessP3Suite s;
    s.C = C;
    s.p2 = p2_griess_formula()(C);
    s.p3 = p3_griess_formula()(C);
    s.dimYanti = dimYanti_formula()(C);
    s.anti_ok = s.p3 + s.dimYanti == s.p2 * (s.p2 - Rational(1)) / Rational(2);
    return s;
}

struct HigherWeightResult {
    int k;
    Rational C;
    Rational value;
    bool integral = false;  // positive integer
};

inline const DimensionFormula& higher_weight_formula(int k) {
    switch (k) {
        case 3: return p3_higher_formula();
        case 4: return p4_higher_formula();
        case 5: return p5_higher_formula();
        default: throw InvalidArgument("lowest weight must be 3, 4 or 5");
    }
}

inline HigherWeightResult higher_weight_pk(int k, const Rational& C) {
    HigherWeightResult r;
    r.k = k;
    r.C = C;
    r.value = higher_weight_formula(k)(C);
    r.integral = r.value.is_integer() && r.value.sign() > 0;
    return r;
}

}  // namespace exvoa
