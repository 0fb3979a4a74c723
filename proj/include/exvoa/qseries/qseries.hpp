/**
 * @file qseries.hpp
 * @brief Truncated q-expansions q^lead * (a_0 + a_1 q + ... + a_N q^N).
 *
 * The leading exponent lives in the coefficient field, so the same code path
 * handles numeric exponents (e.g. -1 for the J function) and symbolic ones
 * (-C/24 in Q(C)). Every series knows the last index it can vouch for;
 * arithmetic propagates that bound and reading past it throws.
 */
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "exvoa/error.hpp"
#include "exvoa/exact/ratfunc.hpp"

namespace exvoa {

template <class F>
class QSeries {
public:
    using field_type = F;

    QSeries() : lead_(0), coeffs_{F(0)} {}
    QSeries(F lead, std::vector<F> coeffs) : lead_(std::move(lead)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw InvalidArgument("q-series needs at least one coefficient");
    }

    /// The constant series c, known through q^N.
    static QSeries constant(const F& c, int trunc) {
        std::vector<F> v(static_cast<std::size_t>(trunc) + 1, F(0));
        v[0] = c;
        return QSeries(F(0), std::move(v));
    }

    const F& lead() const { return lead_; }
    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<F>& coeffs() const { return coeffs_; }

    /// Coefficient of q^(lead + n); throws past the truncation order.
    const F& coeff(int n) const {
        if (n < 0 || n > trunc())
            throw TruncationError("coefficient " + std::to_string(n) + " requested from a series known through " +
                                  std::to_string(trunc()));
        return coeffs_[static_cast<std::size_t>(n)];
    }
    const F& operator[](int n) const { return coeff(n); }

    QSeries truncated(int n) const {
        if (n > trunc())
            throw TruncationError("cannot extend a series known through " + std::to_string(trunc()) + " to " +
                                  std::to_string(n));
        return QSeries(lead_, std::vector<F>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    /// Multiplies by q^k.
    QSeries shifted(long k) const { return QSeries(lead_ + F(k), coeffs_); }

    QSeries scaled(const F& s) const {
        QSeries out = *this;
        for (auto& c : out.coeffs_) c = c * s;
        return out;
    }

    QSeries operator-() const { return scaled(F(-1)); }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        auto offset = integer_offset(b.lead_, a.lead_);
        if (!offset) throw SeriesMismatch("cannot add q-series whose leading exponents differ by a non-integer");
        if (*offset < 0) return b + a;
        const long k = *offset;
        const int n = std::min<long>(a.trunc(), b.trunc() + k);
        std::vector<F> out(static_cast<std::size_t>(n) + 1, F(0));
        for (int i = 0; i <= n; ++i) {
            out[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)];
            if (i >= k) out[static_cast<std::size_t>(i)] += b.coeffs_[static_cast<std::size_t>(i - k)];
        }
        return QSeries(a.lead_, std::move(out));
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const int n = std::min(a.trunc(), b.trunc());
        std::vector<F> out(static_cast<std::size_t>(n) + 1, F(0));
        for (int i = 0; i <= n; ++i) {
            const F& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return QSeries(a.lead_ + b.lead_, std::move(out));
    }

    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    /// D = q d/dq: a_n -> (lead + n) a_n.
    QSeries derive() const {
        QSeries out = *this;
        for (int n = 0; n <= trunc(); ++n) out.coeffs_[static_cast<std::size_t>(n)] *= lead_ + F(n);
        return out;
    }

    /// Multiplicative inverse; requires a_0 != 0.
    QSeries inverse() const {
        if (coeffs_[0].is_zero()) throw DivisionByZero("inverse of a q-series with zero leading coefficient");
        const int n = trunc();
        std::vector<F> out(static_cast<std::size_t>(n) + 1, F(0));
        const F inv0 = F(1) / coeffs_[0];
        out[0] = inv0;
        for (int i = 1; i <= n; ++i) {
            F acc(0);
            for (int j = 1; j <= i; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(i - j)];
            out[static_cast<std::size_t>(i)] = -acc * inv0;
        }
        return QSeries(-lead_, std::move(out));
    }

    /// True when every known coefficient vanishes.
    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const F& c) { return c.is_zero(); });
    }

    template <class G, class Fn>
    QSeries<G> map(Fn&& fn) const {
        std::vector<G> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(fn(c));
        return QSeries<G>(fn(lead_), std::move(out));
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.lead_ == b.lead_ && a.coeffs_ == b.coeffs_; }

private:
    F lead_;
    std::vector<F> coeffs_;
};

/// Lifts a rational series into another coefficient field.
template <class F>
QSeries<F> lift_series(const QSeries<Rational>& s) {
    return s.template map<F>([](const Rational& r) { return F(r); });
}

}  // namespace exvoa
