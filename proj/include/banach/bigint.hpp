#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace banach {

/// Arbitrary-precision signed integer, sign + magnitude over 32-bit limbs
/// (least significant limb first). Zero is canonical: empty magnitude,
/// non-negative sign. All arithmetic is exact.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t value);
    explicit BigInt(std::string_view decimal);

    static BigInt from_u64(uint64_t value);
    /// 2^e for e >= 0.
    static BigInt pow2(uint64_t e);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
    /// -1, 0, or +1.
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
    friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

    /// Truncated division: q rounds toward zero, r carries the dividend's sign,
    /// |r| < |divisor|. Throws std::domain_error on zero divisor.
    static void divmod(const BigInt& dividend, const BigInt& divisor,
                       BigInt& quotient, BigInt& remainder);

    /// Non-negative gcd of the magnitudes; gcd(0, 0) = 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    /// Magnitude shifts; operand must be non-negative.
    BigInt operator<<(uint64_t bits) const;
    BigInt operator>>(uint64_t bits) const;

    bool operator==(const BigInt& rhs) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    /// Canonical residue in [0, m) of the signed value. Requires m > 0.
    uint32_t mod_u32(uint32_t m) const;

    bool fits_u64() const;
    /// Magnitude as uint64_t; throws std::overflow_error unless fits_u64().
    uint64_t to_u64() const;

    /// Nearest double, sign-aware; +/-inf when out of range.
    double to_double() const;
    /// Writes a mantissa in [0.5, 1) (0 for zero) and the base-2 exponent such
    /// that value ~= mantissa * 2^exponent. Sign is ignored.
    double frexp_magnitude(int64_t& exponent) const;

    /// Bits in the magnitude; 0 for zero.
    size_t bit_length() const;
    /// Index of the lowest set bit; 0 for zero.
    size_t trailing_zero_bits() const;

    std::string to_string() const;

private:
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    void add_magnitude(const BigInt& rhs);
    void sub_magnitude_smaller(const BigInt& rhs);  // requires |rhs| <= |this|
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    void shift_left_bits(uint64_t bits);
    void shift_right_bits(uint64_t bits);
    void mul_small(uint32_t factor);
    uint32_t divmod_small(uint32_t divisor);  // returns remainder
    static void divmod_magnitude(const BigInt& u, const BigInt& v,
                                 BigInt& q, BigInt& r);

    friend class Rational;
};

}  // namespace banach
