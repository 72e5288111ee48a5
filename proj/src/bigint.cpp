#include "banach/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace banach {

namespace {

constexpr uint64_t kLimbBase = uint64_t{1} << 32;

// Decimal conversion works in chunks of 9 digits.
constexpr uint32_t kDecChunk = 1'000'000'000u;
constexpr int kDecChunkDigits = 9;

}  // namespace

BigInt::BigInt(int64_t value) {
    uint64_t mag;
    if (value < 0) {
        negative_ = true;
        mag = uint64_t{0} - static_cast<uint64_t>(value);
    } else {
        mag = static_cast<uint64_t>(value);
    }
    if (mag != 0) limbs_.push_back(static_cast<uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<uint32_t>(mag >> 32));
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_u64(uint64_t value) {
    BigInt r;
    if (value != 0) r.limbs_.push_back(static_cast<uint32_t>(value));
    if (value >> 32) r.limbs_.push_back(static_cast<uint32_t>(value >> 32));
    return r;
}

BigInt::BigInt(std::string_view decimal) {
    size_t pos = 0;
    bool neg = false;
    if (pos < decimal.size() && (decimal[pos] == '+' || decimal[pos] == '-')) {
        neg = decimal[pos] == '-';
        ++pos;
    }
    if (pos == decimal.size())
        throw std::invalid_argument("BigInt: empty decimal string");
    for (; pos < decimal.size();) {
        // Consume up to 9 digits at a time.
        uint32_t chunk = 0;
        uint32_t scale = 1;
        int digits = 0;
        while (pos < decimal.size() && digits < kDecChunkDigits) {
            char c = decimal[pos];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: invalid decimal digit");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            scale *= 10;
            ++digits;
            ++pos;
        }
        mul_small(scale);
        if (chunk != 0) {
            BigInt addend = from_u64(chunk);
            add_magnitude(addend);
        }
    }
    negative_ = neg && !limbs_.empty();
}

BigInt BigInt::pow2(uint64_t e) {
    BigInt r;
    r.limbs_.assign(e / 32 + 1, 0);
    r.limbs_.back() = uint32_t{1} << (e % 32);
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i])
            return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = compare_magnitude(*this, rhs);
    if (negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

void BigInt::add_magnitude(const BigInt& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<uint32_t>(sum);
        carry = sum >> 32;
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_magnitude_smaller(const BigInt& rhs) {
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sub = borrow;
        if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
        uint64_t cur = limbs_[i];
        if (cur < sub) {
            limbs_[i] = static_cast<uint32_t>(cur + kLimbBase - sub);
            borrow = 1;
        } else {
            limbs_[i] = static_cast<uint32_t>(cur - sub);
            borrow = 0;
        }
        if (borrow == 0 && i >= rhs.limbs_.size()) break;
    }
    trim();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        add_magnitude(rhs);
        return *this;
    }
    int c = compare_magnitude(*this, rhs);
    if (c == 0) {
        limbs_.clear();
        negative_ = false;
    } else if (c > 0) {
        sub_magnitude_smaller(rhs);
    } else {
        BigInt tmp = rhs;
        tmp.sub_magnitude_smaller(*this);
        *this = std::move(tmp);
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    if (this == &rhs) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    negative_ = !negative_;
    *this += rhs;
    if (!limbs_.empty()) negative_ = !negative_;
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    const std::vector<uint32_t>& a = limbs_;
    const std::vector<uint32_t>& b = rhs.limbs_;
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<uint32_t>(carry);
    }
    limbs_ = std::move(out);
    negative_ = negative_ != rhs.negative_;
    trim();
    return *this;
}

void BigInt::mul_small(uint32_t factor) {
    if (factor == 0 || limbs_.empty()) {
        limbs_.clear();
        negative_ = false;
        return;
    }
    uint64_t carry = 0;
    for (uint32_t& limb : limbs_) {
        uint64_t cur = uint64_t{limb} * factor + carry;
        limb = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
}

uint32_t BigInt::divmod_small(uint32_t divisor) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

// Knuth algorithm D on 32-bit limbs. u, v taken as magnitudes; v nonzero.
void BigInt::divmod_magnitude(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r) {
    if (compare_magnitude(u, v) < 0) {
        q = BigInt();
        r = u;
        r.negative_ = false;
        return;
    }
    if (v.limbs_.size() == 1) {
        q = u;
        q.negative_ = false;
        uint32_t rem = q.divmod_small(v.limbs_[0]);
        r = from_u64(rem);
        return;
    }

    const size_t n = v.limbs_.size();
    const size_t m = u.limbs_.size() - n;

    // Normalize so the divisor's top limb has its high bit set.
    const int shift = std::countl_zero(v.limbs_.back());
    BigInt vn = v;
    vn.negative_ = false;
    vn.shift_left_bits(static_cast<uint64_t>(shift));
    BigInt un = u;
    un.negative_ = false;
    un.shift_left_bits(static_cast<uint64_t>(shift));
    un.limbs_.resize(u.limbs_.size() + 1, 0);  // room for the top digit

    q.limbs_.assign(m + 1, 0);
    q.negative_ = false;

    const uint64_t vtop = vn.limbs_[n - 1];
    const uint64_t vsecond = vn.limbs_[n - 2];

    for (size_t j = m + 1; j-- > 0;) {
        uint64_t numer = (uint64_t{un.limbs_[j + n]} << 32) | un.limbs_[j + n - 1];
        uint64_t qhat = numer / vtop;
        uint64_t rhat = numer % vtop;
        if (qhat >= kLimbBase) {
            qhat = kLimbBase - 1;
            rhat = numer - qhat * vtop;
        }
        while (rhat < kLimbBase &&
               qhat * vsecond > ((rhat << 32) | un.limbs_[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }

        // Multiply-and-subtract qhat * vn from un[j .. j+n].
        uint64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t prod = qhat * vn.limbs_[i] + carry;
            carry = prod >> 32;
            uint64_t sub = (prod & 0xFFFFFFFFu) + borrow;
            uint64_t cur = un.limbs_[i + j];
            if (cur < sub) {
                un.limbs_[i + j] = static_cast<uint32_t>(cur + kLimbBase - sub);
                borrow = 1;
            } else {
                un.limbs_[i + j] = static_cast<uint32_t>(cur - sub);
                borrow = 0;
            }
        }
        uint64_t top_sub = carry + borrow;
        uint64_t top_cur = un.limbs_[j + n];
        if (top_cur < top_sub) {
            // qhat was one too large: add vn back once.
            un.limbs_[j + n] = static_cast<uint32_t>(top_cur + kLimbBase - top_sub);
            --qhat;
            uint64_t add_carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t cur = uint64_t{un.limbs_[i + j]} + vn.limbs_[i] + add_carry;
                un.limbs_[i + j] = static_cast<uint32_t>(cur);
                add_carry = cur >> 32;
            }
            un.limbs_[j + n] = static_cast<uint32_t>(un.limbs_[j + n] + add_carry);
        } else {
            un.limbs_[j + n] = static_cast<uint32_t>(top_cur - top_sub);
        }
        q.limbs_[j] = static_cast<uint32_t>(qhat);
    }

    q.trim();
    un.limbs_.resize(n);
    un.trim();
    un.shift_right_bits(static_cast<uint64_t>(shift));
    r = std::move(un);
}

void BigInt::divmod(const BigInt& dividend, const BigInt& divisor,
                    BigInt& quotient, BigInt& remainder) {
    if (divisor.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt q, r;
    divmod_magnitude(dividend, divisor, q, r);
    q.negative_ = !q.limbs_.empty() && (dividend.negative_ != divisor.negative_);
    r.negative_ = !r.limbs_.empty() && dividend.negative_;
    quotient = std::move(q);
    remainder = std::move(r);
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    *this = std::move(r);
    return *this;
}

void BigInt::shift_left_bits(uint64_t bits) {
    if (limbs_.empty() || bits == 0) return;
    const size_t limb_shift = bits / 32;
    const unsigned bit_shift = bits % 32;
    const size_t old_size = limbs_.size();
    limbs_.resize(old_size + limb_shift + (bit_shift ? 1 : 0), 0);
    if (bit_shift == 0) {
        for (size_t i = old_size; i-- > 0;) limbs_[i + limb_shift] = limbs_[i];
    } else {
        for (size_t i = old_size; i-- > 0;) {
            uint64_t cur = uint64_t{limbs_[i]} << bit_shift;
            limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(cur >> 32);
            limbs_[i + limb_shift] = static_cast<uint32_t>(cur);
        }
    }
    for (size_t i = 0; i < limb_shift; ++i) limbs_[i] = 0;
    trim();
}

void BigInt::shift_right_bits(uint64_t bits) {
    if (limbs_.empty() || bits == 0) return;
    const size_t limb_shift = bits / 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        negative_ = false;
        return;
    }
    const unsigned bit_shift = bits % 32;
    const size_t new_size = limbs_.size() - limb_shift;
    for (size_t i = 0; i < new_size; ++i) {
        uint64_t cur = uint64_t{limbs_[i + limb_shift]} >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            cur |= uint64_t{limbs_[i + limb_shift + 1]} << (32 - bit_shift);
        limbs_[i] = static_cast<uint32_t>(cur);
    }
    limbs_.resize(new_size);
    trim();
}

BigInt BigInt::operator<<(uint64_t bits) const {
    if (negative_) throw std::domain_error("BigInt: shift of negative value");
    BigInt r = *this;
    r.shift_left_bits(bits);
    return r;
}

BigInt BigInt::operator>>(uint64_t bits) const {
    if (negative_) throw std::domain_error("BigInt: shift of negative value");
    BigInt r = *this;
    r.shift_right_bits(bits);
    return r;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return limbs_.size() * 32 - static_cast<size_t>(std::countl_zero(limbs_.back()));
}

size_t BigInt::trailing_zero_bits() const {
    if (limbs_.empty()) return 0;
    size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return i * 32 + static_cast<size_t>(std::countr_zero(limbs_[i]));
}

// Binary gcd; shifts are batched through trailing_zero_bits so power-of-two
// operands cost O(limbs), not O(bits).
BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs();
    BigInt y = b.abs();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const size_t shift = std::min(x.trailing_zero_bits(), y.trailing_zero_bits());
    x.shift_right_bits(x.trailing_zero_bits());
    for (;;) {
        y.shift_right_bits(y.trailing_zero_bits());
        if (x.limbs_.size() == 1 && x.limbs_[0] == 1) break;
        if (y.limbs_.size() == 1 && y.limbs_[0] == 1) {
            x = y;
            break;
        }
        int c = compare_magnitude(x, y);
        if (c == 0) break;
        if (c > 0) std::swap(x, y);
        y.sub_magnitude_smaller(x);
        if (y.is_zero()) break;
    }
    x.shift_left_bits(shift);
    return x;
}

uint32_t BigInt::mod_u32(uint32_t m) const {
    if (m == 0) throw std::domain_error("BigInt: modulus must be positive");
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;)
        rem = ((rem << 32) | limbs_[i]) % m;
    if (negative_ && rem != 0) rem = m - rem;
    return static_cast<uint32_t>(rem);
}

bool BigInt::fits_u64() const { return limbs_.size() <= 2 && !negative_; }

uint64_t BigInt::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigInt: value does not fit in 64 bits");
    uint64_t v = 0;
    if (limbs_.size() > 0) v |= limbs_[0];
    if (limbs_.size() > 1) v |= uint64_t{limbs_[1]} << 32;
    return v;
}

double BigInt::frexp_magnitude(int64_t& exponent) const {
    if (limbs_.empty()) {
        exponent = 0;
        return 0.0;
    }
    const size_t bl = bit_length();
    // Top 64 bits of the magnitude.
    uint64_t top = 0;
    if (bl <= 64) {
        if (limbs_.size() > 0) top |= limbs_[0];
        if (limbs_.size() > 1) top |= uint64_t{limbs_[1]} << 32;
        top <<= 64 - bl;
    } else {
        BigInt shifted = abs();
        shifted.shift_right_bits(bl - 64);
        top = (uint64_t{shifted.limbs_[1]} << 32) | shifted.limbs_[0];
    }
    exponent = static_cast<int64_t>(bl);
    return std::ldexp(static_cast<double>(top), -64);
}

double BigInt::to_double() const {
    int64_t exp = 0;
    double mant = frexp_magnitude(exp);
    double v = std::ldexp(mant, static_cast<int>(exp));
    return negative_ ? -v : v;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    BigInt tmp = *this;
    std::vector<uint32_t> chunks;
    while (!tmp.limbs_.empty()) chunks.push_back(tmp.divmod_small(kDecChunk));
    std::string out;
    if (negative_) out.push_back('-');
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(kDecChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

}  // namespace banach
