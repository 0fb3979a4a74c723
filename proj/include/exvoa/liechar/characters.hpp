/**
 * @file characters.hpp
 * @brief Rank <= 2 root systems, formal characters and the chi_2 identity.
 *
 * Weights are written in fundamental-weight coordinates, so the torus
 * variable z_i stands for e^{omega_i} and a root alpha contributes the
 * monomial z^alpha. The invariant form is normalized with long roots of
 * norm 2 and is carried as the Gram matrix of the fundamental weights.
 */
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "exvoa/classify/formulas.hpp"
#include "exvoa/error.hpp"
#include "exvoa/exact/ratfunc.hpp"
#include "exvoa/liechar/lie_table.hpp"

namespace exvoa {

using Weight = std::vector<int>;

/// Laurent polynomial in rank-many variables with rational coefficients.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(int vars) : vars_(vars) {}

    static Laurent monomial(const Weight& e, const Rational& c = Rational(1)) {
        Laurent l(static_cast<int>(e.size()));
        l.add(e, c);
        return l;
    }
    static Laurent constant(int vars, const Rational& c) { return monomial(Weight(static_cast<std::size_t>(vars), 0), c); }

    int vars() const { return vars_; }
    const std::map<Weight, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Weight& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Weight& e, const Rational& c) {
        if (static_cast<int>(e.size()) != vars_) throw InvalidArgument("exponent has the wrong number of variables");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += o.scaled(Rational(-1)); }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.check(b);
        Laurent out(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Weight e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add(e, ca * cb);
            }
        return out;
    }
    Laurent scaled(const Rational& s) const {
        Laurent out(vars_);
        for (const auto& [e, c] : terms_) out.add(e, c * s);
        return out;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    /// Adams operation: every variable squared, i.e. chi(g) -> chi(g^2).
    Laurent adams(int k = 2) const {
        Laurent out(vars_);
        for (const auto& [e, c] : terms_) {
            Weight f = e;
            for (auto& x : f) x *= k;
            out.add(f, c);
        }
        return out;
    }

    /// Value at the identity (all variables 1).
    Rational at_identity() const {
        Rational s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool is_integral() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
    }
    bool is_nonnegative() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.sign() >= 0; });
    }

    /// Exact quotient a / b; throws when b does not divide a.
    friend Laurent exact_divide(Laurent a, const Laurent& b) {
        a.check(b);
        if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
        Laurent q(a.vars_);
        const auto& [bl, bc] = *b.terms_.rbegin();
        const Weight a_min = a.is_zero() ? Weight{} : a.terms_.begin()->first;
        const Weight& b_min = b.terms_.begin()->first;
        for (long steps = 0; !a.is_zero(); ++steps) {
            if (steps > 1000000) throw InvalidArgument("Laurent division is not exact");
            const auto& [al, ac] = *a.terms_.rbegin();
            Weight e(al.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = al[i] - bl[i];
            // every quotient term lies lexicographically above a_min - b_min
            Weight floor_e(al.size());
            for (std::size_t i = 0; i < e.size(); ++i) floor_e[i] = a_min[i] - b_min[i];
            if (e < floor_e) throw InvalidArgument("Laurent division is not exact");
            Laurent t = monomial(e, ac / bc);
            q += t;
            a -= t * b;
        }
        return q;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += it->second.to_string();
            for (std::size_t i = 0; i < it->first.size(); ++i)
                if (it->first[i]) s += "*z" + std::to_string(i + 1) + "^" + std::to_string(it->first[i]);
        }
        return s;
    }

private:
    void check(const Laurent& o) const {
        if (o.vars_ != vars_) throw InvalidArgument("Laurent polynomials in different numbers of variables");
    }

    int vars_ = 0;
    std::map<Weight, Rational> terms_;
};

using FormalCharacter = Laurent;

struct RootSystem {
    std::string name;
    int rank = 0;
    long dim = 0;
    /// Cartan matrix A_ij = <alpha_i, alpha_j^vee>; row i is alpha_i in fundamental coordinates.
    std::vector<std::vector<int>> cartan;
    /// Gram matrix <omega_i, omega_j>, long roots of norm 2.
    std::vector<std::vector<Rational>> weight_gram;
    std::vector<Weight> roots;
    std::vector<Weight> positive_roots;

    Rational inner(const Weight& a, const Weight& b) const {
        Rational s(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                s += weight_gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rational(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]);
        return s;
    }

    /// Simple reflection s_i(lambda) = lambda - lambda_i alpha_i.
    Weight reflect(int i, const Weight& w) const {
        Weight out = w;
        const int c = w[static_cast<std::size_t>(i)];
        for (int j = 0; j < rank; ++j) out[static_cast<std::size_t>(j)] -= c * cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return out;
    }

    Weight rho() const { return Weight(static_cast<std::size_t>(rank), 1); }
};

namespace detail {

inline RootSystem make_root_system(std::string name, long dim, std::vector<std::vector<int>> cartan,
                                   std::vector<std::vector<Rational>> simple_gram) {
    RootSystem rs;
    rs.name = std::move(name);
    rs.rank = static_cast<int>(cartan.size());
    rs.dim = dim;
    rs.cartan = std::move(cartan);
    const std::size_t r = static_cast<std::size_t>(rs.rank);
    // alpha = A omega  =>  <omega, omega> = A^{-1} B A^{-T}
    std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r, Rational(0)));
    if (r == 1) {
        inv[0][0] = Rational(1) / Rational(rs.cartan[0][0]);
    } else {
        const Rational det = Rational(rs.cartan[0][0] * rs.cartan[1][1] - rs.cartan[0][1] * rs.cartan[1][0]);
        inv[0][0] = Rational(rs.cartan[1][1]) / det;
        inv[0][1] = Rational(-rs.cartan[0][1]) / det;
        inv[1][0] = Rational(-rs.cartan[1][0]) / det;
        inv[1][1] = Rational(rs.cartan[0][0]) / det;
    }
    rs.weight_gram.assign(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l) rs.weight_gram[i][j] += inv[i][k] * simple_gram[k][l] * inv[j][l];
    // roots: Weyl orbit of the simple roots
    std::set<Weight> seen;
    std::vector<Weight> frontier;
    for (std::size_t i = 0; i < r; ++i) {
        Weight a(rs.cartan[i].begin(), rs.cartan[i].end());
        if (seen.insert(a).second) frontier.push_back(a);
    }
    while (!frontier.empty()) {
        Weight w = frontier.back();
        frontier.pop_back();
        for (int i = 0; i < rs.rank; ++i) {
            Weight s = rs.reflect(i, w);
            if (seen.insert(s).second) frontier.push_back(s);
        }
    }
    rs.roots.assign(seen.begin(), seen.end());
    // positive roots: positive inner product with a regular dominant weight
    for (const auto& a : rs.roots)
        if (rs.inner(a, rs.rho()).sign() > 0) rs.positive_roots.push_back(a);
    return rs;
}

}  // namespace detail

/// Rank <= 2 root systems by name: A1, A2, B2 (= C2), G2.
inline RootSystem root_system(const std::string& name) {
    if (name == "A1") return detail::make_root_system("A1", 3, {{2}}, {{Rational(2)}});
    if (name == "A2")
        return detail::make_root_system("A2", 8, {{2, -1}, {-1, 2}}, {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}});
    if (name == "B2")
        // alpha_1 long, alpha_2 short
        return detail::make_root_system("B2", 10, {{2, -2}, {-1, 2}}, {{Rational(2), Rational(-1)}, {Rational(-1), Rational(1)}});
    if (name == "G2")
        // alpha_1 short (norm 2/3), alpha_2 long (norm 2)
        return detail::make_root_system("G2", 14, {{2, -1}, {-3, 2}},
                                        {{Rational(2, 3), Rational(-1)}, {Rational(-1), Rational(2)}});
    throw RankUnsupported("root system " + name + " is not available (rank <= 2 only: A1, A2, B2, G2)");
}

/// All elements of the Weyl group as (word length parity, action) pairs, generated by closure.
struct WeylElement {
    std::vector<std::vector<int>> matrix;  // acts on fundamental coordinates: w(lambda)_j = sum_i lambda_i m_ij
    int sign = 1;

    Weight act(const Weight& w) const {
        Weight out(w.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) out[j] += w[i] * matrix[i][j];
        return out;
    }
};

inline std::vector<WeylElement> weyl_group(const RootSystem& rs) {
    const std::size_t r = static_cast<std::size_t>(rs.rank);
    auto image = [&](const std::vector<std::vector<int>>& m, int i) {
        std::vector<std::vector<int>> out(r, std::vector<int>(r));
        for (std::size_t b = 0; b < r; ++b) {
            Weight row = m[b];
            Weight s = rs.reflect(i, row);
            out[b] = s;
        }
        return out;
    };
    std::vector<std::vector<int>> id(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    std::map<std::vector<std::vector<int>>, int> seen{{id, 1}};
    std::vector<std::vector<std::vector<int>>> frontier{id};
    while (!frontier.empty()) {
        auto m = frontier.back();
        frontier.pop_back();
        const int sg = seen[m];
        for (int i = 0; i < rs.rank; ++i) {
            auto n = image(m, i);
            if (seen.emplace(n, -sg).second) frontier.push_back(n);
        }
    }
    std::vector<WeylElement> out;
    for (const auto& [m, s] : seen) out.push_back({m, s});
    return out;
}

/// The character with every exponent moved by a Weyl group element.
inline Laurent weyl_act(const WeylElement& w, const Laurent& chi) {
    Laurent out(chi.vars());
    for (const auto& [e, c] : chi.terms()) out.add(w.act(e), c);
    return out;
}

inline bool is_weyl_invariant(const RootSystem& rs, const Laurent& chi) {
    for (const auto& w : weyl_group(rs))
        if (!(weyl_act(w, chi) == chi)) return false;
    return true;
}

/// chi_1 = rank + sum over roots of e^alpha.
inline FormalCharacter adjoint_character(const RootSystem& rs) {
    if (rs.rank > 2) throw RankUnsupported("characters are implemented for rank <= 2");
    Laurent chi = Laurent::constant(rs.rank, Rational(rs.rank));
    for (const auto& a : rs.roots) chi.add(a, Rational(1));
    return chi;
}

/// sum over alpha, beta in the roots of <alpha, beta> e^{alpha + beta}.
inline Laurent root_pair_sum(const RootSystem& rs) {
    Laurent s(rs.rank);
    for (const auto& a : rs.roots)
        for (const auto& b : rs.roots) {
            Weight e(a.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            s.add(e, rs.inner(a, b));
        }
    return s;
}

/// chi_2 = [5C+22 + 3(2+C) chi_1 + (C-10)/2 (psi^2 chi_1 + chi_1^2 - sum <a,b> e^{a+b})] / (C-22).
inline FormalCharacter chi2_from_chi1(const RootSystem& rs, const Rational& C) {
    if (C == Rational(22)) throw PoleError("chi_2 has a pole at C = 22");
    const Laurent chi1 = adjoint_character(rs);
    Laurent bracket = chi1.adams(2) + chi1 * chi1 - root_pair_sum(rs);
    Laurent total = Laurent::constant(rs.rank, Rational(5) * C + Rational(22)) +
                    chi1.scaled(Rational(3) * (Rational(2) + C)) + bracket.scaled((C - Rational(10)) / Rational(2));
    Laurent chi2 = total.scaled(Rational(1) / (C - Rational(22)));
    if (!chi2.is_integral())
        throw NonIntegralCharacter("chi_2 for " + rs.name + " at C = " + C.to_string() + " has non-integral coefficients");
    return chi2;
}

/// Weyl character formula: sum_w sgn(w) e^{w(lambda+rho)} / sum_w sgn(w) e^{w rho}.
inline FormalCharacter weyl_character(const RootSystem& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank) throw InvalidArgument("weight has the wrong rank");
    for (int x : lambda)
        if (x < 0) throw InvalidArgument("highest weight must be dominant");
    const auto W = weyl_group(rs);
    Weight lr = lambda;
    const Weight rho = rs.rho();
    for (std::size_t i = 0; i < lr.size(); ++i) lr[i] += rho[i];
    Laurent num(rs.rank), den(rs.rank);
    for (const auto& w : W) {
        num.add(w.act(lr), Rational(w.sign));
        den.add(w.act(rho), Rational(w.sign));
    }
    return exact_divide(num, den);
}

/// Weyl dimension formula prod_{alpha > 0} <lambda+rho, alpha> / <rho, alpha>.
inline Rational weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    Weight lr = lambda;
    const Weight rho = rs.rho();
    for (std::size_t i = 0; i < lr.size(); ++i) lr[i] += rho[i];
    Rational d(1);
    for (const auto& a : rs.positive_roots) d *= rs.inner(lr, a) / rs.inner(rho, a);
    return d;
}

/// Dominant weights lambda with lambda_i <= bound whose irreducible character equals chi.
inline std::vector<Weight> find_irreducible(const RootSystem& rs, const FormalCharacter& chi, int bound) {
    std::vector<Weight> out;
    const Rational dim = chi.at_identity();
    Weight lam(static_cast<std::size_t>(rs.rank), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == lam.size()) {
            if (weyl_dimension(rs, lam) == dim && weyl_character(rs, lam) == chi) out.push_back(lam);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            lam[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// At the identity the chi_2 identity reads
/// [5C+22 + 3(2+C) d + (C-10)/2 (d + d^2)] / (C-22) = dim Y(C) with d = d_1(C);
/// the double sum vanishes there because the roots sum to zero.
inline bool chi2_identity_check() {
    const RatFunc C = RatFunc::C();
    const RatFunc& d = d1_formula().value;
    RatFunc lhs = (RatFunc(5) * C + RatFunc(22) + RatFunc(3) * (RatFunc(2) + C) * d +
                   (C - RatFunc(10)) / RatFunc(2) * (d + d * d)) /
                  (C - RatFunc(22));
    return lhs == dimY_formula().value;
}

}  // namespace exvoa
