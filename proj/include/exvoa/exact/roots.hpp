/**
 * @file roots.hpp
 * @brief Exact roots of univariate polynomials over Q and over Q(C).
 *
 * Rational roots over Q: the real roots of the squarefree part are isolated
 * numerically (bisection between critical points, in multiprecision floats),
 * each is rounded to the nearest candidate m / lc, and only candidates that
 * vanish exactly are returned.
 *
 * Roots in Q(C): after clearing denominators and making the polynomial monic
 * by t = lc * s, every root in Q(C) is a polynomial in C of bounded degree.
 * It is interpolated from the rational roots at a few sample values of C and
 * accepted only if it is an exact root.
 */
#pragma once

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "exvoa/exact/ratfunc.hpp"

namespace exvoa {

namespace detail {

inline mpf_class eval_mpf(const PolyQ& p, const mpf_class& x, mp_bitcnt_t prec) {
    mpf_class acc(0, prec);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        mpf_class c(it->raw(), prec);
        acc = acc * x + c;
    }
    return acc;
}

/// Approximate real roots of a squarefree polynomial, ascending.
inline std::vector<mpf_class> real_roots_mpf(const PolyQ& p, mp_bitcnt_t prec) {
    std::vector<mpf_class> out;
    if (p.degree() <= 0) return out;
    if (p.degree() == 1) {
        mpf_class r(p.coeff(0).raw(), prec);
        r = -r / mpf_class(p.coeff(1).raw(), prec);
        out.push_back(r);
        return out;
    }
    // Cauchy bound
    mpf_class bound(1, prec);
    {
        Rational m(0);
        for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / p.lead()));
        bound = mpf_class((m + Rational(1)).raw(), prec);
    }
    std::vector<mpf_class> cuts;
    cuts.push_back(-bound);
    for (auto& c : real_roots_mpf(squarefree_part(p.derivative()), prec))
        if (c > -bound && c < bound) cuts.push_back(c);
    cuts.push_back(bound);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        mpf_class lo = cuts[i], hi = cuts[i + 1];
        mpf_class flo = eval_mpf(p, lo, prec), fhi = eval_mpf(p, hi, prec);
        if (sgn(flo) == 0) {
            out.push_back(lo);
            continue;
        }
        if (sgn(flo) * sgn(fhi) > 0) continue;
        for (mp_bitcnt_t it = 0; it < 2 * prec; ++it) {
            mpf_class mid(0, prec);
            mid = (lo + hi) / 2;
            if (mid == lo || mid == hi) break;
            mpf_class fm = eval_mpf(p, mid, prec);
            if (sgn(fm) == 0) {
                lo = hi = mid;
                break;
            }
            if (sgn(fm) == sgn(flo)) lo = mid;
            else hi = mid;
        }
        out.push_back(lo);
    }
    return out;
}

inline PolyQ lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    PolyQ out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        PolyQ term(ys[i]);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * PolyQ(std::vector<Rational>{-xs[j], Rational(1)}).scaled(Rational(1) / (xs[i] - xs[j]));
        }
        out += term;
    }
    return out;
}

}  // namespace detail

/// All distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const PolyQ& p) {
    if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
    std::vector<Rational> out;
    if (p.degree() == 0) return out;
    PolyQ prim = detail::primitive_integer_part(squarefree_part(p));
    // factor out the root 0 exactly
    int shift = 0;
    while (prim.coeff(shift).is_zero()) ++shift;
    if (shift > 0) {
        out.push_back(Rational(0));
        std::vector<Rational> rest(prim.coeffs().begin() + shift, prim.coeffs().end());
        prim = PolyQ(std::move(rest));
    }
    std::size_t bits = 0;
    for (const auto& c : prim.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.num().get_mpz_t(), 2));
    const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(4 * bits + 256);
    const Integer lc = prim.lead().num();
    for (const auto& r : detail::real_roots_mpf(prim, prec)) {
        mpf_class scaled(0, prec);
        scaled = r * mpf_class(lc, prec);
        mpf_class rounded = floor(scaled + mpf_class(0.5, prec));
        Integer m(rounded);
        for (int delta = -1; delta <= 1; ++delta) {
            Rational cand(Integer(m + delta), lc);
            if (prim(cand).is_zero() && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All distinct roots in Q(C) of a polynomial with coefficients in Q(C).
inline std::vector<RatFunc> rational_function_roots(const Poly<RatFunc>& p) {
    if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
    std::vector<RatFunc> out;
    const int n = p.degree();
    if (n <= 0) return out;
    // clear denominators
    PolyQ l(Rational(1));
    for (const auto& c : p.coeffs()) l = l * c.den().exact_div(gcd(l, c.den()));
    std::vector<PolyQ> a;
    for (const auto& c : p.coeffs()) a.push_back(c.num() * l.exact_div(c.den()));
    // monic in t = a_n s: b_k = a_k a_n^(n-1-k)
    const PolyQ an = a.back();
    std::vector<PolyQ> b(static_cast<std::size_t>(n) + 1);
    int D = 0;
    for (int k = 0; k <= n; ++k) {
        PolyQ v = a[static_cast<std::size_t>(k)];
        for (int e = 0; e < n - 1 - k; ++e) v = v * an;
        if (k == n) v = PolyQ(Rational(1));
        b[static_cast<std::size_t>(k)] = v;
        if (k < n && !v.is_zero()) D = std::max(D, (v.degree() + (n - k) - 1) / (n - k));
    }
    // sample points avoiding zeros of the leading coefficient
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> roots_at;
    for (long c = 1; static_cast<int>(xs.size()) <= D; ++c) {
        Rational x(c);
        std::vector<Rational> coeffs;
        for (const auto& v : b) coeffs.push_back(v(x));
        auto r = rational_roots(PolyQ(std::move(coeffs)));
        if (r.empty()) return out;  // a root over Q(C) would specialize to one here
        xs.push_back(x);
        roots_at.push_back(std::move(r));
    }
    std::size_t combos = 1;
    for (const auto& r : roots_at) combos *= r.size();
    if (combos > 200000) throw InvalidArgument("too many root combinations to interpolate");
    std::vector<std::size_t> idx(xs.size(), 0);
    for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rem = c;
        std::vector<Rational> ys;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ys.push_back(roots_at[i][rem % roots_at[i].size()]);
            rem /= roots_at[i].size();
        }
        PolyQ t = detail::lagrange_interpolate(xs, ys);
        RatFunc s = RatFunc(t) / RatFunc(an);
        if (p.eval(s).is_zero() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

}  // namespace exvoa
