/**
 * @file matrix.hpp
 * @brief Small dense matrices over exact rings.
 *
 * bareiss_determinant works over any integral domain with exact division
 * (Z, Q, Q[C]); solve_linear needs a field (Q, Q(C)).
 */
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "exvoa/error.hpp"
#include "exvoa/exact/poly.hpp"
#include "exvoa/exact/ratfunc.hpp"

namespace exvoa {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    template <class Fn>
    auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const R&>()))> {
        Matrix<decltype(fn(std::declval<const R&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Integer exact_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
    return a.exact_div(b);
}
inline RatFunc exact_quotient(const RatFunc& a, const RatFunc& b) { return a / b; }

/// Fraction-free (Bareiss) determinant with row pivoting.
template <class R>
R bareiss_determinant(Matrix<R> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    if (n == 0) return R(1);
    R prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return R(0);
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(t, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Result of solving A x = b over a field.
template <class F>
struct LinearSolution {
    std::size_t rank = 0;
    bool consistent = false;
    std::optional<std::vector<F>> solution;  // set when consistent and rank == cols
};

/// Gauss-Jordan elimination on a (possibly overdetermined) system.
template <class F>
LinearSolution<F> solve_linear(Matrix<F> a, std::vector<F> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw InvalidArgument("right-hand side has wrong length");
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        std::swap(b[r], b[p]);
        F inv = F(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            F f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
            b[i] = b[i] - f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    LinearSolution<F> out;
    out.rank = r;
    out.consistent = true;
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) out.consistent = false;
    if (out.consistent && r == cols) {
        std::vector<F> x(cols, F(0));
        for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = b[i];
        out.solution = std::move(x);
    }
    return out;
}

}  // namespace exvoa
