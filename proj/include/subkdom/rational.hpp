#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "subkdom/errors.hpp"

namespace subkdom {

/// Exact rational arithmetic on 64-bit integers, always normalized so that
/// den > 0 and gcd(|num|, den) == 1. Every bound in this library fits
/// comfortably; comparisons cross-multiply in 128 bits.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t value) : num(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const auto lhs = static_cast<__int128>(a.num) * b.den;
        const auto rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::int64_t floor() const {
        const std::int64_t q = num / den;
        return num % den < 0 ? q - 1 : q;
    }
    std::int64_t ceil() const {
        const std::int64_t q = num / den;
        return num % den > 0 ? q + 1 : q;
    }

    /// "p/q" for non-integers, plain "p" otherwise.
    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// ceil(a / b) for b > 0 in pure integer arithmetic.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    const std::int64_t q = a / b;
    return a % b > 0 ? q + 1 : q;
}

}  // namespace subkdom
