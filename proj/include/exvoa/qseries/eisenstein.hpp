/**
 * @file eisenstein.hpp
 * @brief Bernoulli numbers, Eisenstein series and Weierstrass coefficients.
 *
 * Normalization: E_k(q) = -B_k/k! + 2/(k-1)! * sum_{n>=1} sigma_{k-1}(n) q^n
 * for even k >= 2, so E_2 = -1/12 + 2q + ..., E_4 = 1/720 + ..., and
 * E_6 = -1/30240 + .... Bernoulli numbers use B_1 = -1/2.
 */
#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "exvoa/error.hpp"
#include "exvoa/exact/rational.hpp"
#include "exvoa/qseries/qseries.hpp"

namespace exvoa {

/// B_k from sum_{j=0}^{k} binom(k+1, j) B_j = 0.
inline Rational bernoulli(int k) {
    if (k < 0) throw InvalidArgument("Bernoulli index must be non-negative");
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(table.size()) <= k) {
        const long m = static_cast<long>(table.size());
        Rational acc(0);
        for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, static_cast<unsigned long>(j))) * table[static_cast<std::size_t>(j)];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[static_cast<std::size_t>(k)];
}

/// sigma_p(n) for 1 <= n <= N by a divisor sieve; entry 0 is unused.
inline std::vector<Integer> divisor_sigma_table(unsigned p, int N) {
    std::vector<Integer> sigma(static_cast<std::size_t>(N) + 1, 0);
    for (int d = 1; d <= N; ++d) {
        Integer dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), p);
        for (int m = d; m <= N; m += d) sigma[static_cast<std::size_t>(m)] += dp;
    }
    return sigma;
}

/// E_k through q^N, computed from scratch.
inline QSeries<Rational> eisenstein_uncached(int k, int N) {
    if (k % 2 != 0) throw OddWeight("Eisenstein series of odd weight " + std::to_string(k) + " requested");
    if (k < 2) throw InvalidArgument("Eisenstein weight must be at least 2");
    if (N < 0) throw InvalidArgument("truncation order must be non-negative");
    std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1, Rational(0));
    coeffs[0] = -bernoulli(k) / Rational(factorial(static_cast<unsigned long>(k)));
    const Rational scale = Rational(2) / Rational(factorial(static_cast<unsigned long>(k - 1)));
    auto sigma = divisor_sigma_table(static_cast<unsigned>(k - 1), N);
    for (int n = 1; n <= N; ++n) coeffs[static_cast<std::size_t>(n)] = scale * Rational(sigma[static_cast<std::size_t>(n)]);
    return QSeries<Rational>(Rational(0), std::move(coeffs));
}

/// Memoizes Eisenstein series per weight, keeping the longest expansion seen.
/// Lookups at shorter orders return truncations, which equal a fresh computation.
class EisensteinCache {
public:
    QSeries<Rational> get(int k, int N) {
        std::lock_guard lock(mu_);
        auto it = cache_.find(k);
        if (it == cache_.end() || it->second.trunc() < N) {
            auto fresh = eisenstein_uncached(k, N);
            it = cache_.insert_or_assign(k, std::move(fresh)).first;
        }
        return it->second.truncated(N);
    }

    void clear() {
        std::lock_guard lock(mu_);
        cache_.clear();
    }

private:
    std::mutex mu_;
    std::map<int, QSeries<Rational>> cache_;
};

inline EisensteinCache& eisenstein_cache() {
    static EisensteinCache cache;
    return cache;
}

inline QSeries<Rational> eisenstein(int k, int N) { return eisenstein_cache().get(k, N); }

/// Coefficient of z^(m-2) in P_2(z, q), namely (m-1) E_m(q).
inline QSeries<Rational> weierstrass_p2_coeff(int m, int N) {
    if (m < 2) throw InvalidArgument("Weierstrass coefficient index must be at least 2");
    return eisenstein(m, N).scaled(Rational(m - 1));
}

}  // namespace exvoa
