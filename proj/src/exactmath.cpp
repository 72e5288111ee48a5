#include "banach/exactmath.hpp"

#include <algorithm>

namespace banach {

BigInt binomial_exact(uint64_t n, uint64_t k) {
    if (k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt result(1);
    // Each prefix product C(n-k+1..n-k+i) / (1..i) is a whole number, so the
    // running division is exact.
    for (uint64_t i = 1; i <= k; ++i) {
        result *= BigInt::from_u64(n - k + i);
        result /= BigInt::from_u64(i);
    }
    return result;
}

BigInt factorial_exact(uint64_t m) {
    BigInt result(1);
    for (uint64_t i = 2; i <= m; ++i) result *= BigInt::from_u64(i);
    return result;
}

Rational pow2_rational(int64_t e) {
    if (e >= 0) return Rational(BigInt::pow2(static_cast<uint64_t>(e)));
    return Rational(BigInt(1), BigInt::pow2(uint64_t{0} - static_cast<uint64_t>(e)));
}

}  // namespace banach
