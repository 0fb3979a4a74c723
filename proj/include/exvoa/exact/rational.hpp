/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers.
 *
 * Thin value type over GMP's mpq_class. The representation is always
 * canonical: gcd(|num|, den) = 1, den >= 1, and zero is 0/1. Text form is
 * "p/q" with the denominator omitted when it is 1.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "exvoa/error.hpp"

namespace exvoa {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        value_.get_num() = num;
        value_.get_den() = den;
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "p", "-p", "p/q" (whitespace not allowed).
    static Rational parse(std::string_view text) {
        auto bad = [&] { return ParseError("not a rational number: '" + std::string(text) + "'"); };
        if (text.empty()) throw bad();
        auto valid_int = [](std::string_view s) {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
        std::string n(num[0] == '+' ? num.substr(1) : num);
        Integer zn(n, 10), zd(std::string(den), 10);
        if (zd == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
        return Rational(zn, zd);
    }

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    double to_double() const { return value_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) out *= b;
        b *= b;
        exp >>= 1u;
    }
    return out;
}

inline Integer binomial(long n, unsigned long k) {
    Integer out;
    Integer top(n);
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace exvoa

template <>
struct std::hash<exvoa::Rational> {
    std::size_t operator()(const exvoa::Rational& r) const noexcept {
        std::hash<std::string> h;
        return h(r.num().get_str(16)) ^ (h(r.den().get_str(16)) << 1);
    }
};
