/**
 * @file correlators.hpp
 * @brief Genus-zero two-point functions of Casimir vectors.
 *
 * F(a,b;x,y) = G(a,b;x,y) / (x^a y^a (x-y)^a), with a = 2 for weight-one
 * (Lie) primaries and a = 4 for weight-two (Griess) primaries. G is bilinear
 * in a,b and is written in terms of two symbols: S = <a,b> (invariant form)
 * and K = K(a,b) (Killing form). Coefficients live in Q(C)[d], with d the
 * dimension of the primary space carried as an indeterminate.
 *
 * Substituting x = y + w and expanding in w gives
 *     F = sum_n <a, o(lambda^(n)) b> y^(-n) w^(n-a)
 * and each coefficient is checked to be a single power y^(-n).
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "exvoa/exact/poly.hpp"
#include "exvoa/exact/ratfunc.hpp"
#include "exvoa/family.hpp"
#include "exvoa/virasoro/casimir.hpp"

namespace exvoa {

/// Polynomials in the dimension symbol d with coefficients in Q(C).
using DPoly = Poly<RatFunc>;

inline DPoly d_symbol() { return DPoly::x(); }

enum class Bilinear { S, K };

inline const char* to_string(Bilinear b) { return b == Bilinear::S ? "S" : "K"; }

/// Laurent polynomial in x, y whose coefficients are linear in {S, K} over Q(C)[d].
class SymbolicBivariate {
public:
    struct Key {
        int x;
        int y;
        Bilinear symbol;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    const std::map<Key, DPoly>& terms() const { return terms_; }

    void add(int xe, int ye, Bilinear s, const DPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{xe, ye, s}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Adds c * symbol * x^i y^j (x - y)^k.
    void add_times_power_of_difference(int i, int j, int k, Bilinear s, const DPoly& c) {
        for (int t = 0; t <= k; ++t) {
            Rational b(binomial(k, static_cast<unsigned long>(t)));
            if ((k - t) % 2) b = -b;
            add(i + t, j + k - t, s, c.scaled(RatFunc(b)));
        }
    }

    DPoly coeff(int xe, int ye, Bilinear s) const {
        auto it = terms_.find(Key{xe, ye, s});
        return it == terms_.end() ? DPoly() : it->second;
    }

    SymbolicBivariate swapped() const {
        SymbolicBivariate out;
        for (const auto& [k, c] : terms_) out.add(k.y, k.x, k.symbol, c);
        return out;
    }

    /// Total degrees that occur for the given symbol.
    std::vector<int> degrees(Bilinear s) const {
        std::vector<int> out;
        for (const auto& [k, c] : terms_)
            if (k.symbol == s && std::find(out.begin(), out.end(), k.x + k.y) == out.end()) out.push_back(k.x + k.y);
        return out;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [k, c] : terms_)
            if (k.x + k.y != degree) return false;
        return true;
    }

    friend bool operator==(const SymbolicBivariate& a, const SymbolicBivariate& b) { return a.terms_ == b.terms_; }

private:
    std::map<Key, DPoly> terms_;
};

using CorrelatorFamily = Family;

/// G for weight-one primaries:
/// -[d x^2 y^2 + 2 x y (x-y)^2 + (x-y)^4] S + x y (x-y)^2 K.
inline SymbolicBivariate g_function_lie(const DPoly& d = d_symbol()) {
    SymbolicBivariate g;
    const DPoly one(RatFunc(1));
    g.add(2, 2, Bilinear::S, -d);
    g.add_times_power_of_difference(1, 1, 2, Bilinear::S, DPoly(RatFunc(-2)));
    g.add_times_power_of_difference(0, 0, 4, Bilinear::S, -one);
    g.add_times_power_of_difference(1, 1, 2, Bilinear::K, one);
    return g;
}

/// G for weight-two primaries:
/// S [d x^4 y^4 + 8d/C x^3 y^3 (x-y)^2 + 4d(44-C)/(C(5C+22)) x^2 y^2 (x-y)^4
///    + 2(x^2 + y^2)(x-y)^6 - (x-y)^8].
inline SymbolicBivariate g_function_griess(const DPoly& d = d_symbol()) {
    const RatFunc C = RatFunc::C();
    SymbolicBivariate g;
    g.add(4, 4, Bilinear::S, d);
    g.add_times_power_of_difference(3, 3, 2, Bilinear::S, d.scaled(RatFunc(8) / C));
    g.add_times_power_of_difference(2, 2, 4, Bilinear::S,
                                    d.scaled(RatFunc(4) * (RatFunc(44) - C) / (C * (RatFunc(5) * C + RatFunc(22)))));
    const DPoly two(RatFunc(2));
    g.add_times_power_of_difference(2, 0, 6, Bilinear::S, two);
    g.add_times_power_of_difference(0, 2, 6, Bilinear::S, two);
    g.add_times_power_of_difference(0, 0, 8, Bilinear::S, DPoly(RatFunc(-1)));
    return g;
}

/// Coefficient of w^(n - a) y^(-n) in the expansion of F.
struct CasimirCoefficient {
    int n = 0;
    DPoly S;
    DPoly K;
    bool pure = true;

    DPoly part(Bilinear b) const { return b == Bilinear::S ? S : K; }
};

using CasimirCoefficientReport = std::vector<CasimirCoefficient>;

/// Expands F = G / (x^a y^a (x-y)^a) around x = y in w = x - y for n = 0..N.
/// With strict set, a coefficient that is not a single power y^(-n) throws ImpurePower.
inline CasimirCoefficientReport expand_in_w(const SymbolicBivariate& G, CorrelatorFamily family, int N,
                                            bool strict = true) {
    const int a = 2 * primary_weight(family);
    // G(y + w, y) as terms y^e w^f
    std::map<std::tuple<int, int, Bilinear>, DPoly> sub;
    for (const auto& [k, c] : G.terms()) {
        if (k.x < 0) throw InvalidArgument("expand_in_w expects non-negative powers of x");
        for (int t = 0; t <= k.x; ++t) {
            Rational b(binomial(k.x, static_cast<unsigned long>(t)));
            auto key = std::make_tuple(k.x - t + k.y, t, k.symbol);
            auto [it, inserted] = sub.try_emplace(key, c.scaled(RatFunc(b)));
            if (!inserted) it->second += c.scaled(RatFunc(b));
        }
    }
    CasimirCoefficientReport report;
    for (int n = 0; n <= N; ++n) {
        // (y + w)^(-a) = sum_t binom(-a, t) w^t y^(-a-t); overall w^(f + t - a)
        std::map<std::pair<int, Bilinear>, DPoly> by_ypow;
        for (const auto& [key, c] : sub) {
            const auto& [ye, we, sym] = key;
            const int t = n - we;
            if (t < 0) continue;
            Rational b(binomial(-a, static_cast<unsigned long>(t)));
            auto [it, inserted] = by_ypow.try_emplace({ye - 2 * a - t, sym}, c.scaled(RatFunc(b)));
            if (!inserted) it->second += c.scaled(RatFunc(b));
        }
        CasimirCoefficient cc;
        cc.n = n;
        for (const auto& [yk, c] : by_ypow) {
            if (c.is_zero()) continue;
            if (yk.first != -n) {
                cc.pure = false;
                continue;
            }
            (yk.second == Bilinear::S ? cc.S : cc.K) += c;
        }
        if (strict && !cc.pure)
            throw ImpurePower("coefficient of w^" + std::to_string(n - a) + " is not a multiple of y^" +
                              std::to_string(-n));
        report.push_back(std::move(cc));
    }
    return report;
}

/// Zero mode of a vacuum descendant on a primary of weight h, up to level 6,
/// as a polynomial in h (low to high). Derived once from the Borcherds
/// iterate formula and frozen; the test suite re-derives them. None depend on C.
inline PolyQ zero_mode_on_primary(const Partition& p) {
    static const std::map<Partition, std::vector<long>> table = {
        {{}, {1}},
        {{2}, {0, 1}},
        {{3}, {0, -2}},
        {{4}, {0, 3}},
        {{2, 2}, {0, 2, 1}},
        {{5}, {0, -4}},
        {{3, 2}, {0, -2, -2}},
        {{6}, {0, 5}},
        {{4, 2}, {0, 2, 3}},
        {{3, 3}, {0, 6, 4}},
        {{2, 2, 2}, {0, 8, 6, 1}},
    };
    auto it = table.find(p);
    if (it == table.end()) throw InvalidArgument("no frozen zero-mode value for " + partition_key(p));
    std::vector<Rational> c(it->second.begin(), it->second.end());
    return PolyQ(std::move(c));
}

/// <a, o(v) b> / <a, b> for weight-h primaries a, b and a vacuum descendant v.
inline RatFunc zero_mode_pairing(const VirasoroVector<RatFunc>& v, const Rational& h) {
    RatFunc acc(0);
    for (const auto& [p, c] : v.terms()) acc += c * RatFunc(zero_mode_on_primary(p)(h));
    return acc;
}

/// K = kappa(d) S, obtained by equating c_2 with the zero mode of lambda^(2).
struct KillingRelation {
    DPoly kappa;

    /// kappa at a particular dimension value.
    RatFunc at(const RatFunc& d) const { return kappa.eval(d); }
};

inline KillingRelation killing_relation() {
    auto report = expand_in_w(g_function_lie(), CorrelatorFamily::lie, 2);
    const auto& c2 = report[2];
    auto lambda = solve_casimir<RatFunc>(1, 2, RatFunc::C());
    DPoly target = d_symbol().scaled(zero_mode_pairing(lambda.chain[2], Rational(1)));
    if (c2.K.degree() != 0) throw InvalidArgument("Killing coefficient in c_2 is not a nonzero constant");
    return KillingRelation{(target - c2.S).scaled(RatFunc(1) / c2.K.lead())};
}

/// Result of imposing c_4 = <a, o(lambda^(4)) b> after the Killing relation.
struct DimensionClosure {
    DPoly equation;    // linear in d, must vanish
    RatFunc dimension; // its unique root d(C)
};

inline DimensionClosure lie_dimension_closure() {
    auto report = expand_in_w(g_function_lie(), CorrelatorFamily::lie, 4);
    const auto& c4 = report[4];
    auto kill = killing_relation();
    DPoly lhs = c4.S + c4.K * kill.kappa;
    auto lambda = solve_casimir<RatFunc>(1, 4, RatFunc::C());
    DPoly rhs = d_symbol().scaled(zero_mode_pairing(lambda.chain[4], Rational(1)));
    DPoly eq = lhs - rhs;
    if (eq.degree() != 1) throw InvalidArgument("c_4 closure is not linear in d");
    return DimensionClosure{eq, -eq.coeff(0) / eq.coeff(1)};
}

/// Griess analogue: c_6 = <a, o(lambda^(6)) b> with lambda^(6) from the
/// weight-two chain. The constraint is linear in d and its root is p_2(C).
inline DimensionClosure griess_dimension_closure() {
    auto report = expand_in_w(g_function_griess(), CorrelatorFamily::griess, 6);
    auto lambda = solve_casimir<RatFunc>(2, 6, RatFunc::C());
    DPoly rhs = d_symbol().scaled(zero_mode_pairing(lambda.chain[6], Rational(2)));
    DPoly eq = report[6].S - rhs;
    if (eq.degree() != 1) throw InvalidArgument("c_6 closure is not linear in d");
    return DimensionClosure{eq, -eq.coeff(0) / eq.coeff(1)};
}

/// Tr_{V_2}(o(a . b)) / <a,b> = 8 (p_2 + 1) / C.
inline RatFunc griess_trace_form(const RatFunc& p2) { return RatFunc(8) * (p2 + RatFunc(1)) / RatFunc::C(); }
inline Rational griess_trace_form(const Rational& p2, const Rational& C) {
    if (C.is_zero()) throw PoleError("trace form has a pole at C = 0");
    return Rational(8) * (p2 + Rational(1)) / C;
}

}  // namespace exvoa
