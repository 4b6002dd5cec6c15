#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "charp/errors.hpp"

namespace charp {

// Exact nonnegative rational, used for the exponents t_i of a formal
// combination.  Kept tiny on purpose: the only arithmetic the library needs
// is ceil(t*q) and comparisons.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool positive() const { return num > 0; }

    // ceil(this * q), exact; q a prime power that fits in 64 bits.
    std::uint64_t ceil_mul(std::uint64_t q) const {
        if (num < 0) fail(ErrorKind::InvalidArgument, "negative exponent in ceil_mul");
        // num*q can overflow only for absurd inputs; guard anyway.
        if (num > 0 && q > static_cast<std::uint64_t>(INT64_MAX) / static_cast<std::uint64_t>(num))
            fail(ErrorKind::DegreeExplosion, "t*q exceeds 64-bit budget");
        std::int64_t nq = num * static_cast<std::int64_t>(q);
        return static_cast<std::uint64_t>((nq + den - 1) / den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace charp
