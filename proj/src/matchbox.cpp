#include "banach/matchbox.hpp"

#include "banach/bigint.hpp"
#include "banach/exactmath.hpp"

namespace banach {

Rational MatchboxDistribution::total() const {
    Rational sum;
    for (const Rational& p : probs) sum += p;
    return sum;
}

MatchboxDistribution distribution(uint32_t n) {
    MatchboxDistribution dist;
    dist.n = n;
    dist.probs.reserve(n + 1);

    // Walk r = 0..n, updating the binomial coefficient in place:
    // C(2n-r-1, n) = C(2n-r, n) * (n-r) / (2n-r).  The division is exact.
    const uint64_t two_n = 2 * static_cast<uint64_t>(n);
    BigInt coeff = binomial_exact(two_n, n);
    for (uint32_t r = 0; r <= n; ++r) {
        dist.probs.emplace_back(coeff, BigInt::pow2(two_n - r));
        if (r < n) {
            coeff *= BigInt::from_u64(n - r);
            coeff /= BigInt::from_u64(two_n - r);
        }
    }
    return dist;
}

IdentityCheck check_identity(uint32_t n) {
    IdentityCheck check;
    check.n = n;

    // Sum the left side as an integer first: sum_r C(2n-r, n) 2^r, then
    // divide once by 2^n.  Same coefficient walk as distribution().
    const uint64_t two_n = 2 * static_cast<uint64_t>(n);
    BigInt coeff = binomial_exact(two_n, n);
    BigInt sum;
    for (uint32_t r = 0; r <= n; ++r) {
        sum += coeff << r;
        if (r < n) {
            coeff *= BigInt::from_u64(n - r);
            coeff /= BigInt::from_u64(two_n - r);
        }
    }
    check.lhs = Rational(sum, BigInt::pow2(n));
    check.rhs = Rational(BigInt::pow2(n));
    check.holds = check.lhs == check.rhs;
    return check;
}

}  // namespace banach
