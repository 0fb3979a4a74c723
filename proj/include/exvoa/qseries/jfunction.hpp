/**
 * @file jfunction.hpp
 * @brief The normalized modular function J = j - 744 = q^-1 + 0 + 196884 q + ...
 *
 * Built directly from Eisenstein series via the discriminant, with no
 * reference to any differential equation, so it can serve as an oracle for
 * MDE solutions.
 *
 * The library's E_k carry constant term -B_k/k!; the classical series with
 * constant term 1 is E_k * (-k!/B_k). With those, Delta = (E4^3 - E6^2)/1728
 * and j = E4^3 / Delta.
 */
#pragma once

#include "exvoa/qseries/eisenstein.hpp"

namespace exvoa {

/// Eisenstein series rescaled to constant term 1.
inline QSeries<Rational> classical_eisenstein(int k, int N) {
    Rational factor = -Rational(factorial(static_cast<unsigned long>(k))) / bernoulli(k);
    return eisenstein(k, N).scaled(factor);
}

/// J(q) with coefficients of q^-1 .. q^N (the series object has trunc N + 1).
inline QSeries<Rational> jseries(int N) {
    if (N < 1) throw InvalidArgument("jseries needs N >= 1");
    const int M = N + 1;  // Delta/q loses one order; j = E4^3 / Delta gains it back
    auto e4 = classical_eisenstein(4, M + 1);
    auto e6 = classical_eisenstein(6, M + 1);
    auto e4cubed = e4 * e4 * e4;
    auto delta = (e4cubed - e6 * e6).scaled(Rational(1, 1728));
    // delta = q + ..., so divide by q: drop the zero constant and shift the exponent
    std::vector<Rational> reduced(delta.coeffs().begin() + 1, delta.coeffs().end());
    QSeries<Rational> delta_over_q(Rational(0), std::move(reduced));
    auto j = (e4cubed.truncated(M) * delta_over_q.inverse()).shifted(-1);
    auto out = j - QSeries<Rational>::constant(Rational(744), M);
    return out.truncated(M);
}

}  // namespace exvoa
