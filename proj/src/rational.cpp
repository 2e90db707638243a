#include "rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

namespace freeindex {

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::optional<mpz_class> parse_integer(std::string_view s) {
    if (!is_integer_token(s)) return std::nullopt;
    return mpz_class(std::string(s), 10);
}

// mantissa[.fraction]  ->  (numerator, power-of-ten denominator exponent)
struct DecimalParts {
    mpz_class digits;
    long frac_digits = 0;
};

std::optional<DecimalParts> parse_decimal_mantissa(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string digits;
    long frac = 0;
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        frac = static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty()) return std::nullopt;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    DecimalParts out;
    out.digits = mpz_class(digits, 10);
    if (negative) out.digits = -out.digits;
    out.frac_digits = frac;
    return out;
}

mpz_class pow10(unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

}  // namespace

Rational::Rational(long num, long den) : v_(0) {
    if (den == 0) raise(ErrorCode::Internal, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den = parse_integer(text.substr(slash + 1));
        if (!num || !den || sgn(*den) == 0) return std::nullopt;
        mpq_class q(*num, *den);
        q.canonicalize();
        Rational r(0);
        r.v_ = q;
        return r;
    }

    // split off a base-10 exponent, if any
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_part = text.substr(e + 1);
        if (!is_integer_token(exp_part)) return std::nullopt;
        exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
        mantissa = text.substr(0, e);
    }

    auto dec = parse_decimal_mantissa(mantissa);
    if (!dec) return std::nullopt;

    mpz_class num = dec->digits;
    mpz_class den = 1;
    long net = exponent - dec->frac_digits;
    if (net > 0) {
        num *= pow10(static_cast<unsigned long>(net));
    } else if (net < 0) {
        den = pow10(static_cast<unsigned long>(-net));
    }
    mpq_class q(num, den);
    q.canonicalize();
    Rational r(0);
    r.v_ = q;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace freeindex
