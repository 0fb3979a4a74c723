/**
 * @file module.hpp
 * @brief Virasoro highest-weight modules in the PBW partition basis.
 *
 * A basis vector is labelled by a weakly decreasing partition [p1, ..., pr]
 * and stands for L_{-p1} ... L_{-pr} |h>. In the vacuum module V(C,0) we
 * also impose L_{-1}|0> = 0, so parts are at least 2; in a Verma module
 * V(C,h) parts are at least 1.
 *
 * L_m is applied with [L_m, L_n] = (m-n) L_{m+n} + C/12 m(m^2-1) delta_{m+n,0}
 * and L_n |h> = 0 for n > 0, L_0 |h> = h |h>. Results are memoized per
 * (m, partition), so one module object should be reused across calls.
 */
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "exvoa/error.hpp"
#include "exvoa/exact/matrix.hpp"
#include "exvoa/exact/ratfunc.hpp"

namespace exvoa {

using Partition = std::vector<int>;

inline int partition_level(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline std::string partition_key(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

/// All partitions of n with every part >= min_part, in reverse-lexicographic order.
inline std::vector<Partition> partitions_with_min_part(int n, int min_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= min_part; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Basis of V_n(C,0): partitions of n with parts >= 2, reverse-lexicographic.
inline std::vector<Partition> vacuum_basis(int n) {
    if (n < 0) throw InvalidArgument("level must be non-negative");
    return partitions_with_min_part(n, 2);
}

/// A homogeneous vector: partition -> coefficient, zero coefficients never stored.
template <class F>
class VirasoroVector {
public:
    VirasoroVector() = default;
    explicit VirasoroVector(int level) : level_(level) {}

    static VirasoroVector basis(const Partition& p, const F& c = F(1)) {
        VirasoroVector v(partition_level(p));
        v.add(p, c);
        return v;
    }
    static VirasoroVector vacuum(const F& c = F(1)) { return basis({}, c); }

    int level() const { return level_; }
    const std::map<Partition, F>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    F coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add(const Partition& p, const F& c) {
        if (c.is_zero()) return;
        if (partition_level(p) != level_) throw InvalidArgument("partition " + partition_key(p) + " not at level " + std::to_string(level_));
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VirasoroVector& operator+=(const VirasoroVector& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) level_ = o.level_;
        if (o.level_ != level_) throw InvalidArgument("adding vectors at different levels");
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    VirasoroVector& operator-=(const VirasoroVector& o) { return *this += o.scaled(F(-1)); }
    friend VirasoroVector operator+(VirasoroVector a, const VirasoroVector& b) { return a += b; }
    friend VirasoroVector operator-(VirasoroVector a, const VirasoroVector& b) { return a -= b; }

    VirasoroVector scaled(const F& s) const {
        VirasoroVector out(level_);
        if (s.is_zero()) return out;
        for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * s);
        return out;
    }

    /// Componentwise equality; zero vectors are equal regardless of level.
    friend bool operator==(const VirasoroVector& a, const VirasoroVector& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.level_ == b.level_ && a.terms_ == b.terms_;
    }

    template <class G, class Fn>
    VirasoroVector<G> map(Fn&& fn) const {
        VirasoroVector<G> out(level_);
        for (const auto& [p, c] : terms_) out.add(p, fn(c));
        return out;
    }

private:
    int level_ = 0;
    std::map<Partition, F> terms_;
};

/// Highest-weight Virasoro module with memoized L_m action over a ring R.
template <class R>
class VirasoroModule {
public:
    using Vector = VirasoroVector<R>;

    /// The vacuum module V(C,0) with L_{-1}|0> = 0.
    static VirasoroModule vacuum(R central_charge) { return VirasoroModule(std::move(central_charge), R(0), true); }
    /// The Verma module V(C,h).
    static VirasoroModule verma(R central_charge, R h) { return VirasoroModule(std::move(central_charge), std::move(h), false); }

    VirasoroModule(const VirasoroModule& o) : c_(o.c_), h_(o.h_), vacuum_(o.vacuum_) {}

    const R& central_charge() const { return c_; }
    const R& highest_weight() const { return h_; }
    bool is_vacuum() const { return vacuum_; }
    int min_part() const { return vacuum_ ? 2 : 1; }

    std::vector<Partition> basis(int n) const { return partitions_with_min_part(n, min_part()); }

    /// L_m on a single basis vector.
    Vector apply_basis(int m, const Partition& p) {
        {
            std::lock_guard lock(mu_);
            auto it = memo_.find({m, p});
            if (it != memo_.end()) return it->second;
        }
        Vector result = compute(m, p);
        std::lock_guard lock(mu_);
        memo_.emplace(std::make_pair(m, p), result);
        return result;
    }

    /// L_m v; the result lives at level(v) - m (zero when that is negative).
    Vector apply(int m, const Vector& v) {
        Vector out(v.level() - m);
        if (v.level() - m < 0) return out;
        for (const auto& [p, c] : v.terms()) out += apply_basis(m, p).scaled(c);
        return out;
    }

    /// <u, v> for a basis vector u, using L_k^dagger = L_{-k} and <h|h> = 1.
    R inner(const Partition& u, const Vector& v) {
        if (partition_level(u) != v.level()) return R(0);
        Vector cur = v;
        for (int part : u) {
            cur = apply(part, cur);
            if (cur.is_zero()) return R(0);
        }
        return cur.coeff({});
    }

    R inner(const Vector& u, const Vector& v) {
        R acc(0);
        for (const auto& [p, c] : u.terms()) acc += c * inner(p, v);
        return acc;
    }

    /// Gram matrix of the level-n basis.
    Matrix<R> gram(int n) {
        auto b = basis(n);
        Matrix<R> m(b.size(), b.size());
        for (std::size_t j = 0; j < b.size(); ++j) {
            Vector vj = Vector::basis(b[j]);
            for (std::size_t i = 0; i <= j; ++i) {
                R e = inner(b[i], vj);
                m(i, j) = e;
                m(j, i) = e;
            }
        }
        return m;
    }

private:
    VirasoroModule(R c, R h, bool vacuum) : c_(std::move(c)), h_(std::move(h)), vacuum_(vacuum) {}

    Vector compute(int m, const Partition& p) {
        const int level = partition_level(p);
        Vector out(level - m);
        if (level - m < 0) return out;
        if (m == 0) return Vector::basis(p, h_ + R(level));
        if (p.empty()) {
            if (m > 0) return out;
            if (m == -1 && vacuum_) return out;
            return Vector::basis({-m});
        }
        if (m < 0 && -m >= p.front()) {
            Partition q;
            q.reserve(p.size() + 1);
            q.push_back(-m);
            q.insert(q.end(), p.begin(), p.end());
            return Vector::basis(q);
        }
        // L_m L_{-p1} w = L_{-p1} L_m w + (m + p1) L_{m - p1} w + central term
        const int p1 = p.front();
        const Partition rest(p.begin() + 1, p.end());
        const Vector w = Vector::basis(rest);
        out += apply(-p1, apply(m, w));
        if (m + p1 != 0) out += apply(m - p1, w).scaled(R(m + p1));
        if (m == p1) {
            R central = c_ * R(Rational(static_cast<long>(m) * m * m - m, 12L));
            out += w.scaled(central);
        }
        return out;
    }

    R c_;
    R h_;
    bool vacuum_;
    std::mutex mu_;
    std::map<std::pair<int, Partition>, Vector> memo_;
};

/// Free-function form: L_m v in the vacuum module of central charge C.
template <class R>
VirasoroVector<R> apply_L(int m, const VirasoroVector<R>& v, const R& C) {
    auto mod = VirasoroModule<R>::vacuum(C);
    return mod.apply(m, v);
}

/// M_n(C,0) with polynomial entries in C.
inline Matrix<PolyQ> gram_matrix(int n) {
    auto mod = VirasoroModule<PolyQ>::vacuum(PolyQ::x());
    return mod.gram(n);
}

/// M_n(C,0) at a fixed central charge.
inline Matrix<Rational> gram_matrix(int n, const Rational& c) {
    auto mod = VirasoroModule<Rational>::vacuum(c);
    return mod.gram(n);
}

/// det M_n(C,0) as a polynomial in C, by fraction-free elimination.
inline PolyQ kac_determinant(int n) { return bareiss_determinant(gram_matrix(n)); }

/// Central charges C_{p,q} = 1 - 6(p-q)^2/(pq), p,q >= 2 coprime, 2 <= (p-1)(q-1) <= n.
inline std::vector<Rational> kac_zeros(int n) {
    std::vector<Rational> out;
    for (int p = 2; p <= n + 1; ++p)
        for (int q = p + 1; (p - 1) * (q - 1) <= n; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Rational c = Rational(1) - Rational(6L * (p - q) * (p - q), static_cast<long>(p) * q);
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Monic polynomial whose roots are exactly the given rationals.
inline PolyQ poly_from_roots(const std::vector<Rational>& roots) {
    PolyQ out(Rational(1));
    for (const auto& r : roots) out = out * PolyQ(std::vector<Rational>{-r, Rational(1)});
    return out;
}

}  // namespace exvoa
