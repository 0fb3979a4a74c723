/**
 * @file ratfunc.hpp
 * @brief The rational-function field Q(C) in the central-charge indeterminate.
 *
 * Canonical form: gcd(num, den) = 1 and den monic, so structural equality is
 * mathematical equality. Zero is 0/1.
 */
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "exvoa/exact/poly.hpp"
#include "exvoa/exact/rational.hpp"

namespace exvoa {

class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(int v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}
    RatFunc(const PolyQ& p) : num_(p), den_(Rational(1)) {}
    RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        normalize();
    }

    /// The indeterminate C.
    static RatFunc C() { return RatFunc(PolyQ::x()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// The value of a constant function, if it is one.
    std::optional<Rational> constant_value() const {
        if (!is_constant()) return std::nullopt;
        return num_.coeff(0);
    }

    RatFunc operator-() const {
        RatFunc out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, Reduce{});
        if (a.den_.is_one()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, Trusted{});
        if (b.den_.is_one()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, Trusted{});
        PolyQ g = gcd(a.den_, b.den_);
        PolyQ ad = a.den_.exact_div(g);
        PolyQ bd = b.den_.exact_div(g);
        return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_, Reduce{});
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, a.den_, Trusted{});
        PolyQ g1 = gcd(a.num_, b.den_);
        PolyQ g2 = gcd(b.num_, a.den_);
        return RatFunc(a.num_.exact_div(g1) * b.num_.exact_div(g2), a.den_.exact_div(g2) * b.den_.exact_div(g1),
                       Monic{});
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return a * b.inverse();
    }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
        return RatFunc(den_, num_, Monic{});
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Exact value at C = c; throws PoleError when the denominator vanishes there.
    Rational eval(const Rational& c) const {
        Rational d = den_(c);
        if (d.is_zero()) throw PoleError("pole at C = " + c.to_string() + " of " + to_string());
        return num_(c) / d;
    }
    Rational operator()(const Rational& c) const { return eval(c); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

private:
    struct Trusted {};
    struct Reduce {};
    struct Monic {};
    RatFunc(PolyQ num, PolyQ den, Trusted) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero()) den_ = PolyQ(Rational(1));
    }
    RatFunc(PolyQ num, PolyQ den, Reduce) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    // already coprime; only the denominator needs to be made monic
    RatFunc(PolyQ num, PolyQ den, Monic) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero()) {
            den_ = PolyQ(Rational(1));
            return;
        }
        Rational l = den_.lead();
        if (!l.is_one()) {
            Rational inv = Rational(1) / l;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyQ(Rational(1));
            return;
        }
        PolyQ g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rational l = den_.lead();
        if (!l.is_one()) {
            Rational inv = Rational(1) / l;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    PolyQ num_;
    PolyQ den_;
};

/// Substitutes a value for C in a scalar; the identity on rationals.
inline Rational eval_at(const Rational& x, const Rational&) { return x; }
inline Rational eval_at(const RatFunc& f, const Rational& c) { return f.eval(c); }

/// Integer k with a - b = k, if the difference is an integer constant.
inline std::optional<long> integer_offset(const Rational& a, const Rational& b) {
    Rational d = a - b;
    if (!d.is_integer() || !d.num().fits_slong_p()) return std::nullopt;
    return d.num().get_si();
}
inline std::optional<long> integer_offset(const RatFunc& a, const RatFunc& b) {
    auto c = (a - b).constant_value();
    if (!c) return std::nullopt;
    return integer_offset(*c, Rational(0));
}

}  // namespace exvoa
