#include "banach/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace banach {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    // Copies first so aliasing (x /= x) stays sound.
    BigInt rn = rhs.num_;
    BigInt rd = rhs.den_;
    num_ *= rd;
    den_ *= rn;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    // Cross-multiply; denominators are positive.
    return num_ * rhs.den_ <=> rhs.num_ * den_;
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    int64_t num_exp = 0;
    int64_t den_exp = 0;
    double num_mant = num_.frexp_magnitude(num_exp);
    double den_mant = den_.frexp_magnitude(den_exp);
    double v = std::ldexp(num_mant / den_mant, static_cast<int>(num_exp - den_exp));
    return num_.is_negative() ? -v : v;
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace banach
