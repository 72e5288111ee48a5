#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace banach {

/// Polynomial over Z/p with few terms: sorted (exponent, coefficient) pairs,
/// ascending exponents, no zero coefficients stored.
struct SparsePoly {
    uint32_t modulus = 0;
    std::vector<std::pair<uint64_t, uint32_t>> terms;

    /// Adds coefficient * x^exponent, reducing mod modulus and dropping the
    /// term if the combined coefficient vanishes.
    void add_term(uint64_t exponent, uint64_t coefficient);

    bool operator==(const SparsePoly&) const = default;
};

/// Termwise sum; both polynomials must share a modulus.
SparsePoly add(const SparsePoly& a, const SparsePoly& b);

/// The polynomial x^k + x^{k+1} + ... + x^{p-k-2}, the generating sum whose
/// k-th derivative at x = 2 carries the congruence.  Zero polynomial when
/// k = (p-1)/2.  Argument checks as in the congruence kernels.
SparsePoly geometric_poly(uint32_t p, uint32_t k);

/// Formal derivative applied `order` times: c x^e becomes
/// c * e(e-1)...(e-order+1) x^{e-order}, terms with e < order vanish.
SparsePoly derivative(const SparsePoly& poly, uint32_t order);

/// Value of the polynomial at x, mod the polynomial's modulus.
uint32_t evaluate(const SparsePoly& poly, uint32_t x);

/// Results of the four fixed identities behind the derivative calculation,
/// each checked in exact rational arithmetic (see reduced_identities).
struct ReducedIdentities {
    bool i1 = false;
    bool i2 = false;
    bool i3 = false;
    bool i4 = false;

    bool all() const { return i1 && i2 && i3 && i4; }

    bool operator==(const ReducedIdentities&) const = default;
};

/// Checks, exactly over rationals, the chain of identities that reduces the
/// congruence to the matchbox identity:
///   I1: sum_j C(k,j) (k-j)! (k+1)...(k+j) 2^{-k-j}
///         = k! sum_j (-1)^j C(k,j) 2^{k-j},  and the right side equals k!
///   I2: sum_j 2^{-j} C(k,j) (k-j)! (k+j)!  =  2^k (k!)^2
///   I3: sum_j 2^{-j} C(k+j,k)              =  2^k
///   I4: sum_i C(2k-i,k) 2^{i-k}            =  2^k   (I3 under j = k-i)
ReducedIdentities reduced_identities(uint32_t k);

/// Both evaluation routes for one (p, k), plus the identity checks.
struct ChainReport {
    uint32_t p = 0;
    uint32_t k = 0;
    uint32_t lhs_direct = 0;   // k-th derivative of geometric_poly at x = 2
    uint32_t lhs_leibniz = 0;  // same value via the product-rule expansion
    ReducedIdentities identities;

    bool operator==(const ChainReport&) const = default;
};

/// Runs both routes and throws std::logic_error unless they agree and both
/// equal k! * S(p,k) mod p (S from the congruence kernels).  Also verifies
/// inside the Leibniz route that exponent reduction by p-1 (via 2^{p-1} = 1)
/// does not change any term.  For prime p none of these can fire.
ChainReport chain_check(uint32_t p, uint32_t k);

}  // namespace banach
