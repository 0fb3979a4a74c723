/**
 * @file reference.hpp
 * @brief Published reference values, each tagged with where it comes from.
 *
 * Provenance "paper" marks values transcribed from the published text;
 * "derived" marks values obtained here by substitution or computation.
 */
#pragma once

#include <string>
#include <vector>

#include "exvoa/exact/rational.hpp"

namespace exvoa::reference {

inline constexpr const char* paper = "paper";
inline constexpr const char* derived = "derived";

inline std::vector<Rational> parse_list(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(Rational::parse(s));
    return out;
}

/// The 21 positive central charges with d_1 a positive integer.
inline const std::vector<Rational>& lie_positive_C() {
    static const auto v = parse_list({"2/5", "1", "2", "14/5", "4", "5", "26/5", "6", "32/5", "34/5", "7", "38/5", "8",
                                      "41/5", "42/5", "44/5", "9", "46/5", "47/5", "48/5", "49/5"});
    return v;
}

struct DeligneEntry {
    Rational C;
    std::string algebra;
};

/// The Deligne series with its central charges. The list is printed twice
/// in the source; one printing repeats E6 where E7 belongs (C = 7).
inline const std::vector<DeligneEntry>& deligne_series() {
    static const std::vector<DeligneEntry> v = {
        {Rational(1), "A1"}, {Rational(2), "A2"}, {Rational(14, 5), "G2"}, {Rational(4), "D4"},
        {Rational(26, 5), "F4"}, {Rational(6), "E6"}, {Rational(7), "E7"}, {Rational(8), "E8"},
    };
    return v;
}

/// The 37 central charges with p_2 a positive integer.
inline const std::vector<Rational>& griess_C() {
    static const auto v = parse_list({"-44/5", "8",      "52/5",  "16",    "132/7", "20",    "102/5", "748/35",
                                      "43/2",  "22",     "808/35", "47/2", "24",    "170/7", "49/2",  "172/7",
                                      "152/5", "61/2",   "154/5", "220/7", "63/2",  "32",    "164/5", "236/7",
                                      "34",    "242/7",  "36",    "40",    "204/5", "44",    "109/2", "428/7",
                                      "68",    "484/7",  "187/2", "132",   "1496"});
    return v;
}

struct GriessSurvivor {
    Rational C;
    long p2;
};

/// The nine values that survive the integrality test through order 400.
inline const std::vector<GriessSurvivor>& griess_survivors() {
    static const std::vector<GriessSurvivor> v = {
        {Rational(-44, 5), 1},     {Rational(8), 155},         {Rational(16), 2295},
        {Rational(47, 2), 96255},  {Rational(24), 196883},     {Rational(32), 139503},
        {Rational(164, 5), 90117}, {Rational(236, 7), 63365},  {Rational(40), 20619},
    };
    return v;
}

struct AtlasRow {
    Rational C;
    long p2;
    long p3;
    long dimY;
    std::string group;
};

/// Irreducible character degrees matched in the published table.
inline const std::vector<AtlasRow>& atlas_table() {
    static const std::vector<AtlasRow> v = {
        {Rational(-44, 5), 1, 0, 0, ""},
        {Rational(8), 155, 868, 11067, "O10+(2).2"},
        {Rational(47, 2), 96255, 9550635, 4622913750L, "B"},
        {Rational(24), 196883, 21296876, 19360062527L, "M"},
    };
    return v;
}

struct HigherWeightValue {
    int k;
    Rational C;
    bool integral;
    long value;  // meaningful only when integral
};

inline const std::vector<HigherWeightValue>& higher_weight_values() {
    static const std::vector<HigherWeightValue> v = {
        {3, Rational(48), true, 42987520},
        {4, Rational(72), true, 2593096792L},
        {5, Rational(96), false, 0},
    };
    return v;
}

}  // namespace exvoa::reference
