/**
 * @file ode.hpp
 * @brief Modular linear differential equations in D = q d/dq.
 *
 * An equation of order r is sum_k coeff[k] D^k, where each coeff[k] is a
 * polynomial in the symbols E2, E4, E6 (no relations imposed) with
 * coefficients in Q(C). Expansion substitutes the q-series of the library's
 * E_k, whose constant terms are -1/12, 1/720, -1/30240.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "exvoa/exact/poly.hpp"
#include "exvoa/exact/ratfunc.hpp"
#include "exvoa/exact/roots.hpp"
#include "exvoa/qseries/eisenstein.hpp"

namespace exvoa {

/// Exponents of E2, E4, E6.
using EisensteinMonomial = std::array<int, 3>;

class EisensteinPoly {
public:
    EisensteinPoly() = default;
    EisensteinPoly(const RatFunc& c) { add({0, 0, 0}, c); }

    static EisensteinPoly monomial(EisensteinMonomial m, const RatFunc& c = RatFunc(1)) {
        EisensteinPoly p;
        p.add(m, c);
        return p;
    }
    static EisensteinPoly E(int k) {
        if (k == 2) return monomial({1, 0, 0});
        if (k == 4) return monomial({0, 1, 0});
        if (k == 6) return monomial({0, 0, 1});
        if (k % 2) throw OddWeight("E_" + std::to_string(k) + " has odd weight");
        throw InvalidArgument("only E2, E4, E6 are ODE symbols");
    }

    const std::map<EisensteinMonomial, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatFunc coeff(EisensteinMonomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RatFunc(0) : it->second;
    }

    void add(EisensteinMonomial m, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend EisensteinPoly operator+(EisensteinPoly a, const EisensteinPoly& b) {
        for (const auto& [m, c] : b.terms_) a.add(m, c);
        return a;
    }
    friend EisensteinPoly operator*(const EisensteinPoly& a, const EisensteinPoly& b) {
        EisensteinPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
        return out;
    }
    EisensteinPoly scaled(const RatFunc& s) const {
        EisensteinPoly out;
        for (const auto& [m, c] : terms_) out.add(m, c * s);
        return out;
    }
    friend bool operator==(const EisensteinPoly& a, const EisensteinPoly& b) { return a.terms_ == b.terms_; }

    /// Modular weight of every monomial, or -1 when mixed.
    int weight() const {
        int w = -2;
        for (const auto& [m, c] : terms_) {
            int mw = 2 * m[0] + 4 * m[1] + 6 * m[2];
            if (w == -2) w = mw;
            else if (w != mw) return -1;
        }
        return w == -2 ? 0 : w;
    }

    /// q-series with coefficients q^0 .. q^N. Coefficient values are mapped by coeff_fn.
    template <class F, class Fn>
    QSeries<F> expand(int N, Fn&& coeff_fn) const {
        QSeries<F> out = QSeries<F>::constant(F(0), N);
        for (const auto& [m, c] : terms_) {
            QSeries<Rational> prod = QSeries<Rational>::constant(Rational(1), N);
            static constexpr int ks[3] = {2, 4, 6};
            for (int i = 0; i < 3; ++i)
                for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) prod = prod * eisenstein(ks[i], N);
            out += lift_series<F>(prod).scaled(coeff_fn(c));
        }
        return out;
    }

    /// Value at q = 0 as an element of Q(C).
    RatFunc constant_term() const {
        RatFunc acc(0);
        for (const auto& [m, c] : terms_) {
            Rational v(1);
            v *= pow(Rational(-1, 12), static_cast<unsigned>(m[0]));
            v *= pow(Rational(1, 720), static_cast<unsigned>(m[1]));
            v *= pow(Rational(-1, 30240), static_cast<unsigned>(m[2]));
            acc += c * RatFunc(v);
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            static constexpr const char* names[3] = {"E2", "E4", "E6"};
            for (int i = 0; i < 3; ++i) {
                int e = m[static_cast<std::size_t>(i)];
                if (e == 0) continue;
                s += std::string("*") + names[i];
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    std::map<EisensteinMonomial, RatFunc> terms_;
};

struct ModularLinearODE {
    std::string name;
    /// coeff[k] multiplies D^k; coeff.back() is the leading coefficient.
    std::vector<EisensteinPoly> coeff;

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    bool is_monic() const { return !coeff.empty() && coeff.back() == EisensteinPoly(RatFunc(1)); }
};

/// D^2 + 2 E2 D - (5/4) C (C+4) E4.
inline ModularLinearODE build_lie_mde() {
    const RatFunc C = RatFunc::C();
    ModularLinearODE ode;
    ode.name = "lie";
    ode.coeff.push_back(EisensteinPoly::E(4).scaled(RatFunc(Rational(-5, 4)) * C * (C + RatFunc(4))));
    ode.coeff.push_back(EisensteinPoly::E(2).scaled(RatFunc(2)));
    ode.coeff.push_back(EisensteinPoly(RatFunc(1)));
    return ode;
}

/// D^3 + 6 E2 D^2 + (6 E2^2 - (15/124)(7C^2+80C+152) E4) D - (35/248) C (5C^2+66C+144) E6.
inline ModularLinearODE build_griess_mde() {
    const RatFunc C = RatFunc::C();
    ModularLinearODE ode;
    ode.name = "griess";
    RatFunc q1 = RatFunc(7) * C * C + RatFunc(80) * C + RatFunc(152);
    RatFunc q0 = RatFunc(5) * C * C + RatFunc(66) * C + RatFunc(144);
    ode.coeff.push_back(EisensteinPoly::E(6).scaled(RatFunc(Rational(-35, 248)) * C * q0));
    ode.coeff.push_back(EisensteinPoly::E(2) * EisensteinPoly::E(2).scaled(RatFunc(6)) +
                        EisensteinPoly::E(4).scaled(RatFunc(Rational(-15, 124)) * q1));
    ode.coeff.push_back(EisensteinPoly::E(2).scaled(RatFunc(6)));
    ode.coeff.push_back(EisensteinPoly(RatFunc(1)));
    return ode;
}

/// P(s) = sum_k coeff[k](q = 0) s^k over Q(C).
inline Poly<RatFunc> indicial_polynomial(const ModularLinearODE& ode) {
    std::vector<RatFunc> c;
    for (const auto& k : ode.coeff) c.push_back(k.constant_term());
    return Poly<RatFunc>(std::move(c));
}

/// The indicial polynomial at a fixed central charge.
inline PolyQ indicial_polynomial(const ModularLinearODE& ode, const Rational& C) {
    std::vector<Rational> c;
    for (const auto& k : ode.coeff) c.push_back(k.constant_term().eval(C));
    return PolyQ(std::move(c));
}

/// Indicial roots over the working field: rational roots at fixed C, roots in Q(C) symbolically.
inline std::vector<Rational> indicial_roots(const ModularLinearODE& ode, const Rational& C) {
    return rational_roots(indicial_polynomial(ode, C));
}
inline std::vector<RatFunc> indicial_roots(const ModularLinearODE& ode) {
    return rational_function_roots(indicial_polynomial(ode));
}

}  // namespace exvoa
