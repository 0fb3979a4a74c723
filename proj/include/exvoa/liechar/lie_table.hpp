/**
 * @file lie_table.hpp
 * @brief Dimensions and dual Coxeter numbers of the simple Lie algebras.
 */
#pragma once

#include <string>
#include <vector>

#include "exvoa/error.hpp"

namespace exvoa {

struct LieAlgebraRecord {
    std::string name;  // e.g. "A1", "E8"
    char family;       // 'A' .. 'G'
    int rank;
    long dim;
    long h_dual;

    friend bool operator==(const LieAlgebraRecord&, const LieAlgebraRecord&) = default;
};

inline LieAlgebraRecord classical_record(char family, int n) {
    switch (family) {
        case 'A':
            if (n < 1) break;
            return {"A" + std::to_string(n), 'A', n, static_cast<long>(n) * (n + 2), n + 1L};
        case 'B':
            if (n < 2) break;
            return {"B" + std::to_string(n), 'B', n, static_cast<long>(n) * (2 * n + 1), 2L * n - 1};
        case 'C':
            if (n < 3) break;
            return {"C" + std::to_string(n), 'C', n, static_cast<long>(n) * (2 * n + 1), n + 1L};
        case 'D':
            if (n < 4) break;
            return {"D" + std::to_string(n), 'D', n, static_cast<long>(n) * (2 * n - 1), 2L * n - 2};
        default: break;
    }
    throw InvalidArgument(std::string("no classical algebra ") + family + std::to_string(n));
}

inline const std::vector<LieAlgebraRecord>& exceptional_records() {
    static const std::vector<LieAlgebraRecord> table = {
        {"G2", 'G', 2, 14, 4},   {"F4", 'F', 4, 52, 9},   {"E6", 'E', 6, 78, 12},
        {"E7", 'E', 7, 133, 18}, {"E8", 'E', 8, 248, 30},
    };
    return table;
}

/// Looks up a record by name such as "D4" or "E8".
inline LieAlgebraRecord lie_record(const std::string& name) {
    for (const auto& r : exceptional_records())
        if (r.name == name) return r;
    if (name.size() >= 2) {
        try {
            return classical_record(name[0], std::stoi(name.substr(1)));
        } catch (const std::logic_error&) {
        }
    }
    throw InvalidArgument("unknown simple Lie algebra " + name);
}

/// Every simple Lie algebra of exactly this dimension. B2 = C2, A3 = D3 are listed once.
inline std::vector<LieAlgebraRecord> lie_table_lookup(long dim) {
    if (dim < 1) throw InvalidArgument("dimension must be positive");
    std::vector<LieAlgebraRecord> out;
    const struct {
        char family;
        int first;
    } families[] = {{'A', 1}, {'B', 2}, {'C', 3}, {'D', 4}};
    for (const auto& f : families)
        for (int n = f.first;; ++n) {
            auto r = classical_record(f.family, n);
            if (r.dim > dim) break;
            if (r.dim == dim) out.push_back(r);
        }
    for (const auto& r : exceptional_records())
        if (r.dim == dim) out.push_back(r);
    return out;
}

}  // namespace exvoa
