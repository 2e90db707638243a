#pragma once

#include <cmath>

#include "rational.hpp"

namespace freeindex {

/// Comparison policy per scalar type. Rational compares exactly; double uses
/// the documented absolute tolerances (eps_cmp for equality, eps_align for
/// deciding that a Gromov product vanishes).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;

    static Rational from_int(long n) { return Rational(n); }
    static bool eq(const Rational& a, const Rational& b) { return a == b; }
    static bool is_zero(const Rational& a) { return a.sign() == 0; }
    static bool aligned_zero(const Rational& g) { return g.sign() <= 0; }
    static bool triangle_violated(const Rational& g) { return g.sign() < 0; }
    static bool positive(const Rational& a) { return a.sign() > 0; }
    static Rational abs(const Rational& a) { return a.abs(); }
    static double to_double(const Rational& a) { return a.to_double(); }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static constexpr double eps_cmp = 1e-12;
    static constexpr double eps_align = 1e-10;

    static double from_int(long n) { return static_cast<double>(n); }
    static bool eq(double a, double b) { return std::fabs(a - b) <= eps_cmp; }
    static bool is_zero(double a) { return std::fabs(a) <= eps_cmp; }
    static bool aligned_zero(double g) { return g < eps_align; }
    static bool triangle_violated(double g) { return g < -eps_align; }
    static bool positive(double a) { return std::isfinite(a) && a > 0.0; }
    static double abs(double a) { return std::fabs(a); }
    static double to_double(double a) { return a; }
};

}  // namespace freeindex
