#pragma once

#include <string>
#include <string_view>

#include "banach/bigint.hpp"

namespace banach {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, so equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t value) : num_(value), den_(1) {}
    explicit Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
    /// Reduces on construction. Throws std::domain_error on zero denominator.
    Rational(BigInt numerator, BigInt denominator);

    /// Parses "num/den" or a plain integer.
    static Rational from_string(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    bool operator==(const Rational& rhs) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    /// Nearest double; exponent-aware, so huge numerators/denominators with a
    /// modest ratio still convert accurately.
    double to_double() const;

    /// Always "num/den", lowest terms (integers render as "n/1").
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace banach
