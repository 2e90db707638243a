#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace freeindex {

/// Arbitrary-precision rational number, always kept in canonical form
/// (gcd-reduced, positive denominator). Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);

    /// Accepts "p/q", integers, plain decimals ("1.25") and decimals with a
    /// base-10 exponent ("25e-2"). Returns nullopt on anything else.
    static std::optional<Rational> parse(std::string_view text);

    double to_double() const { return v_.get_d(); }

    /// "p/q" when the denominator is not 1, otherwise just "p".
    std::string str() const;

    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (sgn(b.v_) == 0) raise(ErrorCode::Internal, "rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace freeindex
