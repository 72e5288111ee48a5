#pragma once

#include <cstdint>
#include <vector>

#include "banach/rational.hpp"

namespace banach {

/// Exact distribution of the Banach matchbox problem for boxes of n matches:
/// probs[r] is the probability that exactly r matches remain in the other box
/// when an empty box is first picked, r = 0..n.
struct MatchboxDistribution {
    uint32_t n = 0;
    std::vector<Rational> probs;

    /// Exact sum of all entries (1 for a valid distribution).
    Rational total() const;

    bool operator==(const MatchboxDistribution&) const = default;
};

/// Both sides of the Banach identity sum_{r=0}^{n} C(2n-r, n) 2^{r-n} = 2^n.
struct IdentityCheck {
    uint32_t n = 0;
    Rational lhs;
    Rational rhs;
    bool holds = false;

    bool operator==(const IdentityCheck&) const = default;
};

/// probs[r] = C(2n-r, n) * 2^{r-2n}, exact.
MatchboxDistribution distribution(uint32_t n);

/// Evaluates the Banach identity at n by exact summation.
IdentityCheck check_identity(uint32_t n);

}  // namespace banach
