/**
 * @file casimir.hpp
 * @brief Quadratic Casimir vectors as vacuum descendants.
 *
 * For primaries of lowest weight k the Casimir chain satisfies
 *
 *     L_m lambda^(n) = ((k-1) m + n - k) lambda^(n-m),   1 <= m <= n,
 *
 * seeded by lambda^(0) = (-1)^k d 1 and lambda^(1) = 0 (k = 1 gives the
 * familiar (n-1) lambda^(n-m)). If lambda^(n) lies in V_n(C,0) it is fixed by
 * its pairings with the level-n basis: for u = L_{-p1} u',
 * <u, lambda^(n)> = ((k-1) p1 + n - k) <u', lambda^(n-p1)>, so the Gram
 * system M_n x = b determines it whenever det M_n(C,0) != 0.
 *
 * Everything is linear in the dimension d, so the chain is computed for
 * d = 1 and callers scale by d.
 */
#pragma once

#include <string>
#include <vector>

#include "exvoa/error.hpp"
#include "exvoa/exact/matrix.hpp"
#include "exvoa/virasoro/module.hpp"

namespace exvoa {

template <class F>
struct CasimirSolution {
    int weight = 1;
    int level = 0;
    /// lambda^(0) .. lambda^(level), each per unit of d.
    std::vector<VirasoroVector<F>> chain;
    /// rank of the level-n Gram system and its size (full rank certificate)
    std::size_t rank = 0;
    std::size_t size = 0;
    /// every relation L_m lambda^(j) = coefficient * lambda^(j-m) re-checked for all j, m
    bool relations_verified = false;

    const VirasoroVector<F>& vector() const { return chain.back(); }
};

/// Coefficient ((k-1) m + n - k) in the Casimir mode relation.
inline long casimir_relation_coeff(int weight, int n, int m) { return static_cast<long>(weight - 1) * m + n - weight; }

/// Solves the Casimir chain up to level n for lowest weight k at central charge C.
/// Throws SingularAtC when some Gram system on the way is degenerate.
template <class F>
CasimirSolution<F> solve_casimir(int weight, int n, const F& C) {
    if (weight < 1) throw InvalidArgument("Casimir weight must be at least 1");
    if (n < 2) throw InvalidArgument("Casimir level must be at least 2");
    auto mod = VirasoroModule<F>::vacuum(C);

    CasimirSolution<F> sol;
    sol.weight = weight;
    sol.level = n;
    sol.chain.push_back(VirasoroVector<F>::vacuum(F(weight % 2 == 0 ? 1 : -1)));
    sol.chain.push_back(VirasoroVector<F>(1));

    for (int j = 2; j <= n; ++j) {
        auto basis = vacuum_basis(j);
        Matrix<F> gram = mod.gram(j);
        std::vector<F> rhs;
        rhs.reserve(basis.size());
        for (const auto& u : basis) {
            const int p1 = u.front();
            Partition rest(u.begin() + 1, u.end());
            F c(casimir_relation_coeff(weight, j, p1));
            rhs.push_back(c * mod.inner(rest, sol.chain[static_cast<std::size_t>(j - p1)]));
        }
        auto res = solve_linear(gram, rhs);
        if (!res.solution) {
            std::string where;
            if constexpr (std::is_same_v<F, Rational>) where = " at C = " + C.to_string();
            throw SingularAtC("Casimir system for weight " + std::to_string(weight) + " is singular at level " +
                              std::to_string(j) + where + " (det M_" + std::to_string(j) + "(C,0) = 0)");
        }
        VirasoroVector<F> lam(j);
        for (std::size_t i = 0; i < basis.size(); ++i) lam.add(basis[i], (*res.solution)[i]);
        sol.chain.push_back(std::move(lam));
        if (j == n) {
            sol.rank = res.rank;
            sol.size = basis.size();
        }
    }

    sol.relations_verified = true;
    for (int j = 2; j <= n && sol.relations_verified; ++j)
        for (int m = 1; m <= j; ++m) {
            auto lhs = mod.apply(m, sol.chain[static_cast<std::size_t>(j)]);
            auto rhs = sol.chain[static_cast<std::size_t>(j - m)].scaled(F(casimir_relation_coeff(weight, j, m)));
            if (!(lhs == rhs)) {
                sol.relations_verified = false;
                break;
            }
        }
    return sol;
}

/// Squarefree monic polynomial vanishing exactly where some Gram system of
/// levels 2..n degenerates, i.e. where solve_casimir(k, n, C) is singular.
inline PolyQ casimir_singular_locus(int n) {
    PolyQ prod(Rational(1));
    for (int j = 2; j <= n; ++j) prod = prod * squarefree_part(kac_determinant(j));
    return squarefree_part(prod);
}

}  // namespace exvoa
