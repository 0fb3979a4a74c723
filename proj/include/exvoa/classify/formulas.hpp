/**
 * @file formulas.hpp
 * @brief Closed-form dimension formulas as elements of Q(C).
 *
 * Each formula is assembled from the printed factors and also keeps a plain
 * text transcription of the printed form. Evaluation at a pole throws
 * PoleError.
 */
#pragma once

#include <initializer_list>
#include <string>

#include "exvoa/exact/ratfunc.hpp"

namespace exvoa {

struct DimensionFormula {
    std::string name;
    std::string printed;
    std::string variable = "C";
    RatFunc value;

    Rational operator()(const Rational& x) const { return value.eval(x); }
};

namespace detail {

/// Polynomial with integer coefficients given high to low.
inline RatFunc poly_hi(std::initializer_list<long> hi_to_lo) {
    std::vector<Rational> c;
    for (long v : hi_to_lo) c.insert(c.begin(), Rational(v));
    return RatFunc(PolyQ(std::move(c)));
}
inline RatFunc lin(long a, long b) { return poly_hi({a, b}); }

}  // namespace detail

/// d_1 = C(5C+22)/(10-C).
inline const DimensionFormula& d1_formula() {
    using namespace detail;
    static const DimensionFormula f{"d1", "C(5C+22)/(10-C)", "C", RatFunc::C() * lin(5, 22) / lin(-1, 10)};
    return f;
}

/// h_dual = d_1/C - 1 = (12+6C)/(10-C).
inline const DimensionFormula& hdual_formula() {
    using namespace detail;
    static const DimensionFormula f{"hdual", "(12+6C)/(10-C)", "C", lin(6, 12) / lin(-1, 10)};
    return f;
}

/// Vogel's dimension formula in the variable h = h_dual: 2(5h-6)(h+1)/(h+6).
inline const DimensionFormula& vogel_formula() {
    using namespace detail;
    static const DimensionFormula f{"vogel", "2(5h-6)(h+1)/(h+6)", "h", RatFunc(2) * lin(5, -6) * lin(1, 1) / lin(1, 6)};
    return f;
}

/// dim Y = 5(5C+22)(C-1)(C+2)^2 / (2(C-22)(C-10)).
inline const DimensionFormula& dimY_formula() {
    using namespace detail;
    static const DimensionFormula f{"dimY", "5(5C+22)(C-1)(C+2)^2/(2(C-22)(C-10))", "C",
                                    RatFunc(5) * lin(5, 22) * lin(1, -1) * lin(1, 2) * lin(1, 2) /
                                        (RatFunc(2) * lin(1, -22) * lin(1, -10))};
    return f;
}

/// p_2 = (5C+22)(2C-1)(7C+68) / (2(C^2-55C+748)).
inline const DimensionFormula& p2_griess_formula() {
    using namespace detail;
    static const DimensionFormula f{"p2", "(1/2)(5C+22)(2C-1)(7C+68)/(C^2-55C+748)", "C",
                                    lin(5, 22) * lin(2, -1) * lin(7, 68) / (RatFunc(2) * poly_hi({1, -55, 748}))};
    return f;
}

/// p_3 for the weight-two family: 31C(5C+22)(2C-1)(7C+68)(5C+44) / (6(C^2-86C+1864)(C^2-55C+748)).
inline const DimensionFormula& p3_griess_formula() {
    using namespace detail;
    static const DimensionFormula f{
        "p3", "31C(5C+22)(2C-1)(7C+68)(5C+44)/(6(C^2-86C+1864)(C^2-55C+748))", "C",
        RatFunc(31) * RatFunc::C() * lin(5, 22) * lin(2, -1) * lin(7, 68) * lin(5, 44) /
            (RatFunc(6) * poly_hi({1, -86, 1864}) * poly_hi({1, -55, 748}))};
    return f;
}

/// dim Y in Anti(P_2 (x) P_2) = X + Y.
inline const DimensionFormula& dimYanti_formula() {
    using namespace detail;
    static const DimensionFormula f{
        "dimYanti",
        "(5C+22)(2C-1)(7C+68)(5C+44)(3C^2-134C+136)(14C^2-553C-2796)/(24(C^2-55C+748)^2(C^2-86C+1864))", "C",
        lin(5, 22) * lin(2, -1) * lin(7, 68) * lin(5, 44) * poly_hi({3, -134, 136}) * poly_hi({14, -553, -2796}) /
            (RatFunc(24) * poly_hi({1, -55, 748}) * poly_hi({1, -55, 748}) * poly_hi({1, -86, 1864}))};
    return f;
}

/// Lowest weight 3: (5C+22)(2C-1)(7C+68)(5C+3)(3C+46) / (-5C^4+703C^3-32992C^2+517172C-3984).
inline const DimensionFormula& p3_higher_formula() {
    using namespace detail;
    static const DimensionFormula f{
        "p3_weight3", "(5C+22)(2C-1)(7C+68)(5C+3)(3C+46)/(-5C^4+703C^3-32992C^2+517172C-3984)", "C",
        lin(5, 22) * lin(2, -1) * lin(7, 68) * lin(5, 3) * lin(3, 46) / poly_hi({-5, 703, -32992, 517172, -3984})};
    return f;
}

/// Lowest weight 4: (5/2)(2C-1)(7C+68)(5C+3)(3C+46)(11C+232)(C+10) / ((C-67)(5C^4-1006C^3+67966C^2-1542764C-12576)).
inline const DimensionFormula& p4_higher_formula() {
    using namespace detail;
    static const DimensionFormula f{
        "p4_weight4",
        "(5/2)(2C-1)(7C+68)(5C+3)(3C+46)(11C+232)(C+10)/((C-67)(5C^4-1006C^3+67966C^2-1542764C-12576))", "C",
        RatFunc(Rational(5, 2)) * lin(2, -1) * lin(7, 68) * lin(5, 3) * lin(3, 46) * lin(11, 232) * lin(1, 10) /
            (lin(1, -67) * poly_hi({5, -1006, 67966, -1542764, -12576}))};
    return f;
}

/// Lowest weight 5: p_5 = -q(C)/r(C).
inline const DimensionFormula& p5_higher_formula() {
    using namespace detail;
    static const DimensionFormula f = [] {
        RatFunc q = lin(7, 68) * lin(2, -1) * lin(3, 46) * lin(5, 3) * lin(11, 232) * lin(13, 350) * lin(7, 25) *
                    lin(5, 126) * lin(10, -7);
        RatFunc r = poly_hi({1750, -760575, 132180881, -11429170478L, 484484459322L, -7407871790404L,
                             -37323519053016L, 25483483057200L, -363772080000L});
        return DimensionFormula{
            "p5_weight5",
            "-(7C+68)(2C-1)(3C+46)(5C+3)(11C+232)(13C+350)(7C+25)(5C+126)(10C-7)/"
            "(-363772080000+25483483057200C-37323519053016C^2-7407871790404C^3+484484459322C^4"
            "-11429170478C^5+132180881C^6-760575C^7+1750C^8)",
            "C", -q / r};
    }();
    return f;
}

/// C* = -2 d_1 / C, the other root of the quadratic 5C^2 + (22+d_1)C - 10 d_1 = 0.
inline Rational involution_C(const Rational& C) {
    if (C.is_zero()) throw PoleError("C* is undefined at C = 0");
    return Rational(-2) * d1_formula()(C) / C;
}

}  // namespace exvoa
