/**
 * @file family.hpp
 * @brief The two families of vertex operator algebras treated here.
 *
 * lie: generated by weight-one primaries (V_1 a Lie algebra).
 * griess: no weight-one states, generated by weight-two primaries.
 */
#pragma once

#include <string>
#include <string_view>

#include "exvoa/error.hpp"

namespace exvoa {

enum class Family { lie, griess };

inline std::string to_string(Family f) { return f == Family::lie ? "lie" : "griess"; }

inline Family parse_family(std::string_view s) {
    if (s == "lie") return Family::lie;
    if (s == "griess") return Family::griess;
    throw ParseError("unknown family '" + std::string(s) + "' (expected lie or griess)");
}

/// Lowest conformal weight of the primaries for each family.
inline int primary_weight(Family f) { return f == Family::lie ? 1 : 2; }

}  // namespace exvoa
