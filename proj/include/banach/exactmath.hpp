#pragma once

#include <cstdint>

#include "banach/bigint.hpp"
#include "banach/rational.hpp"

namespace banach {

/// Exact binomial coefficient C(n, k). Returns 0 when k > n.
/// Computed multiplicatively with exact intermediate division, so C(n, k) for
/// large n and small k never materializes n!.
BigInt binomial_exact(uint64_t n, uint64_t k);

/// Exact m!.
BigInt factorial_exact(uint64_t m);

/// Exact 2^e for any integer e, including negative.
Rational pow2_rational(int64_t e);

}  // namespace banach
