/**
 * @file solver.hpp
 * @brief Frobenius-type recursion for modular linear ODEs and the integrality scan.
 *
 * Writing coeff[k] = sum_j c_{k,j} q^j and f = q^s sum_n a_n q^n with a_0 = 1,
 *     P(s+n) a_n = - sum_{m<n} sum_k c_{k,n-m} (s+m)^k a_m.
 * When P(s+n) = 0 (a resonant step) the right side must vanish and a_n is
 * taken from the prescribed values.
 *
 * The working field F is Rational (fixed C) or RatFunc (symbolic C).
 */
#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "exvoa/family.hpp"
#include "exvoa/mde/ode.hpp"

namespace exvoa {

/// An element of Q(C) evaluated at the working central charge.
inline Rational specialize(const RatFunc& c, const Rational& C) { return c.eval(C); }
inline RatFunc specialize(const RatFunc& c, const RatFunc& C) {
    if (C == RatFunc::C()) return c;
    return c.num().eval<RatFunc>(C) / c.den().eval<RatFunc>(C);
}

inline std::vector<Rational> roots_in_field(const Poly<Rational>& p) { return rational_roots(p); }
inline std::vector<RatFunc> roots_in_field(const Poly<RatFunc>& p) { return rational_function_roots(p); }

template <class F>
struct MDESolution {
    QSeries<F> series;
    std::vector<F> indicial_roots;
    std::vector<int> resonances;
    bool residual_verified = false;

    const F& lead() const { return series.lead(); }
};

/// Coefficient series c_{k,j}, j = 0..N, of an ODE at a working central charge.
template <class F>
std::vector<QSeries<F>> ode_coefficient_series(const ModularLinearODE& ode, const F& C, int N) {
    std::vector<QSeries<F>> out;
    for (const auto& k : ode.coeff)
        out.push_back(k.template expand<F>(N, [&](const RatFunc& c) { return specialize(c, C); }));
    return out;
}

template <class F>
Poly<F> indicial_polynomial_at(const ModularLinearODE& ode, const F& C) {
    std::vector<F> c;
    for (const auto& k : ode.coeff) c.push_back(specialize(k.constant_term(), C));
    return Poly<F>(std::move(c));
}

/// Computes a_1, a_2, ... one at a time so callers can stop early.
template <class F>
class MdeStepper {
public:
    MdeStepper(const ModularLinearODE& ode, const F& C, const F& lead, std::map<int, F> prescribed, int capacity)
        : lead_(lead), prescribed_(std::move(prescribed)), capacity_(capacity) {
        if (capacity < 0) throw InvalidArgument("order must be non-negative");
        if (!ode.is_monic()) throw InvalidArgument("ODE must be monic");
        series_ = ode_coefficient_series(ode, C, capacity);
        indicial_ = indicial_polynomial_at(ode, C);
        if (!indicial_.eval(lead_).is_zero()) throw NotIndicialRoot("leading exponent " + lead_.to_string() + " is not an indicial root");
        for (const auto& [n, v] : prescribed_)
            if (n < 1) throw InvalidArgument("prescribed steps must be >= 1");
        coeffs_.push_back(F(1));
        powers_.push_back(power_row(0));
    }

    int computed() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<F>& coeffs() const { return coeffs_; }
    const std::vector<int>& resonances() const { return resonances_; }
    const Poly<F>& indicial() const { return indicial_; }

    const F& next() {
        const int n = computed() + 1;
        if (n > capacity_) throw InvalidArgument("stepper capacity exceeded");
        F rhs(0);
        for (int m = 0; m < n; ++m) {
            if (coeffs_[static_cast<std::size_t>(m)].is_zero()) continue;
            F inner(0);
            const auto& pw = powers_[static_cast<std::size_t>(m)];
            for (std::size_t k = 0; k < series_.size(); ++k) {
                const F& c = series_[k].coeff(n - m);
                if (!c.is_zero()) inner += c * pw[k];
            }
            rhs -= inner * coeffs_[static_cast<std::size_t>(m)];
        }
        F pn = indicial_.eval(lead_ + F(n));
        auto pre = prescribed_.find(n);
        F an;
        if (pn.is_zero()) {
            if (!rhs.is_zero()) throw InconsistentResonance(n);
            if (pre == prescribed_.end()) throw UnprescribedResonance(n);
            an = pre->second;
            resonances_.push_back(n);
        } else {
            an = rhs / pn;
            if (pre != prescribed_.end() && !(pre->second == an))
                throw PrescribedMismatch("step " + std::to_string(n) + " is not resonant and its value " + an.to_string() +
                                         " differs from the prescribed " + pre->second.to_string());
        }
        coeffs_.push_back(std::move(an));
        powers_.push_back(power_row(n));
        return coeffs_.back();
    }

private:
    std::vector<F> power_row(int m) const {
        std::vector<F> row;
        F base = lead_ + F(m), acc(1);
        for (std::size_t k = 0; k < series_.size(); ++k) {
            row.push_back(acc);
            acc *= base;
        }
        return row;
    }

    F lead_;
    std::map<int, F> prescribed_;
    int capacity_;
    std::vector<QSeries<F>> series_;
    Poly<F> indicial_;
    std::vector<F> coeffs_;
    std::vector<std::vector<F>> powers_;
    std::vector<int> resonances_;
};

/// The ODE applied term by term to f, through f's truncation order.
template <class F>
QSeries<F> mde_residual(const ModularLinearODE& ode, const F& C, const QSeries<F>& f) {
    auto cs = ode_coefficient_series(ode, C, f.trunc());
    QSeries<F> acc(f.lead(), std::vector<F>(static_cast<std::size_t>(f.trunc()) + 1, F(0)));
    QSeries<F> d = f;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        acc += cs[k] * d;
        d = d.derive();
    }
    return acc;
}

/// Solves through q^(lead + N) and re-checks the residual.
template <class F>
MDESolution<F> solve_mde(const ModularLinearODE& ode, const F& C, const F& lead, const std::map<int, F>& prescribed,
                         int N) {
    MdeStepper<F> st(ode, C, lead, prescribed, N);
    while (st.computed() < N) st.next();
    MDESolution<F> sol;
    sol.series = QSeries<F>(lead, st.coeffs());
    sol.indicial_roots = roots_in_field(st.indicial());
    sol.resonances = st.resonances();
    sol.residual_verified = mde_residual(ode, C, sol.series).is_zero();
    return sol;
}

/// Leading exponent -C/24 shared by both families.
template <class F>
F vacuum_exponent(const F& C) {
    return -C / F(24);
}

/// The family's ODE with its standard leading form; Griess always prescribes a_1 = 0.
template <class F>
MDESolution<F> solve_family(Family family, const F& C, int N) {
    if (family == Family::lie) return solve_mde<F>(build_lie_mde(), C, vacuum_exponent(C), {}, N);
    return solve_mde<F>(build_griess_mde(), C, vacuum_exponent(C), {{1, F(0)}}, N);
}

struct ScanFailure {
    int n = 0;
    Rational value;
};

struct ScanVerdict {
    Rational C;
    bool pass = false;
    std::optional<ScanFailure> first_failure;
    /// set when the solver itself rejected the candidate
    std::optional<std::string> error;
};

/// Verdict for one candidate: a_1..a_N must all be non-negative integers.
inline ScanVerdict scan_candidate(Family family, const Rational& C, int N) {
    ScanVerdict v;
    v.C = C;
    try {
        std::map<int, Rational> pre;
        if (family == Family::griess) pre[1] = Rational(0);
        MdeStepper<Rational> st(family == Family::lie ? build_lie_mde() : build_griess_mde(), C, vacuum_exponent(C),
                                pre, N);
        while (st.computed() < N) {
            const Rational& a = st.next();
            if (!a.is_integer() || a.sign() < 0) {
                v.first_failure = ScanFailure{st.computed(), a};
                return v;
            }
        }
        v.pass = true;
    } catch (const Error& e) {
        v.error = e.what();
    }
    return v;
}

/// Runs scan_candidate over all candidates; output order follows input order
/// regardless of the number of worker threads.
inline std::vector<ScanVerdict> integrality_scan(Family family, const std::vector<Rational>& candidates, int N,
                                                 unsigned threads = 1) {
    std::vector<ScanVerdict> out(candidates.size());
    if (threads <= 1 || candidates.size() <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) out[i] = scan_candidate(family, candidates[i], N);
        return out;
    }
    // warm the shared Eisenstein cache once before fanning out
    for (int k : {2, 4, 6}) (void)eisenstein(k, N);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, candidates.size()); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < candidates.size();) out[i] = scan_candidate(family, candidates[i], N);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace exvoa
