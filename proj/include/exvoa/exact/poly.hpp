/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * Coefficients are stored low-to-high and trimmed so the leading coefficient
 * is nonzero; the zero polynomial has no coefficients and degree -1.
 * Division requires a field of coefficients.
 */
#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exvoa/error.hpp"
#include "exvoa/exact/rational.hpp"

namespace exvoa {

template <class R>
class Poly {
public:
    using coefficient_type = R;

    Poly() = default;
    Poly(int constant) : Poly(R(constant)) {}
    Poly(const R& constant) {
        if (!constant.is_zero()) coeffs_.push_back(constant);
    }
    explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The indeterminate itself.
    static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }

    static Poly monomial(const R& c, int degree) {
        std::vector<R> v(static_cast<std::size_t>(degree) + 1, R(0));
        v.back() = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    R coeff(int i) const {
        if (i < 0 || i > degree()) return R(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& lead() const {
        if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }

    Poly scaled(const R& s) const {
        if (s.is_zero()) return Poly();
        Poly out = *this;
        for (auto& c : out.coeffs_) c *= s;
        out.trim();
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder; the divisor's leading coefficient must be invertible.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (degree() < d.degree()) return {Poly(), *this};
        std::vector<R> rem = coeffs_;
        std::vector<R> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, R(0));
        const R inv_lead = R(1) / d.lead();
        for (int i = degree(); i >= d.degree(); --i) {
            const R& top = rem[static_cast<std::size_t>(i)];
            if (top.is_zero()) continue;
            R q = top * inv_lead;
            int shift = i - d.degree();
            for (int j = 0; j <= d.degree(); ++j)
                rem[static_cast<std::size_t>(shift + j)] -= q * d.coeffs_[static_cast<std::size_t>(j)];
            quo[static_cast<std::size_t>(shift)] = std::move(q);
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    /// Division that must be exact.
    Poly exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(R(1) / lead());
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<R> out(coeffs_.size() - 1, R(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * R(static_cast<long>(i));
        return Poly(std::move(out));
    }

    /// Horner evaluation at any value of an R-algebra T.
    template <class T>
    T eval(const T& at) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + T(*it);
        return acc;
    }
    R operator()(const R& at) const { return eval<R>(at); }

    std::string to_string(const std::string& var = "C") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const R& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            std::string cs = c.to_string();
            bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (!first) os << (negative ? " - " : " + ");
            else if (negative) os << "-";
            if (negative) cs = cs.substr(1);
            bool simple = cs.find_first_of("+- ") == std::string::npos;
            if (i == 0 || cs != "1") {
                if (simple || i == 0) os << cs;
                else os << "(" << cs << ")";
                if (i > 0) os << "*";
            }
            if (i >= 1) os << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

using PolyQ = Poly<Rational>;

/// Monic gcd by Euclid over a coefficient field. gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {

/// Scales a rational polynomial to a primitive integer polynomial (positive lead).
inline PolyQ primitive_integer_part(const PolyQ& p) {
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Rational> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.emplace_back(v);
    }
    if (p.lead().sign() < 0) g = -g;
    for (auto& c : ints) c = Rational(Integer(c.num() / g));
    return PolyQ(std::move(ints));
}

}  // namespace detail

/// Monic gcd over Q via the primitive polynomial remainder sequence, which
/// keeps every intermediate polynomial integral and content-free.
template <>
inline PolyQ gcd(PolyQ a, PolyQ b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = detail::primitive_integer_part(a);
    b = detail::primitive_integer_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return PolyQ(Rational(1));
        // pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all in Z[x]
        const Rational lb = b.lead();
        std::vector<Rational> r = a.coeffs();
        for (int i = a.degree(); i >= b.degree(); --i) {
            Rational top = r[static_cast<std::size_t>(i)];
            for (auto& c : r) c *= lb;
            if (top.is_zero()) continue;
            int shift = i - b.degree();
            for (int j = 0; j <= b.degree(); ++j)
                r[static_cast<std::size_t>(shift + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(b.degree()));
        a = std::move(b);
        b = detail::primitive_integer_part(PolyQ(std::move(r)));
    }
    return a.monic();
}

/// Squarefree part p / gcd(p, p'), made monic.
inline PolyQ squarefree_part(const PolyQ& p) {
    if (p.degree() <= 0) return p.monic();
    return p.exact_div(gcd(p, p.derivative())).monic();
}

}  // namespace exvoa
