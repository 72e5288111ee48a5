#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "banach/bigint.hpp"
#include "banach/modarith.hpp"

namespace banach {

/// Outcome of evaluating S(p,k) = sum_{i=1}^{p-2k-1} 2^{i-1} C(k-1+i, k)
/// modulo p for one (p, k) pair.
struct CongruenceReport {
    uint32_t p = 0;
    uint32_t k = 0;
    uint32_t term_count = 0;  // p - 2k - 1
    uint32_t residue = 0;     // S(p,k) mod p, in [0, p)
    std::string method;       // exact-oracle | direct-kernel | incremental-kernel
    bool passed = false;      // residue == 0

    bool operator==(const CongruenceReport&) const = default;
};

/// Aggregate outcome of a prime-range sweep.
struct SweepReport {
    uint32_t p_min = 0;
    uint32_t p_max = 0;
    uint64_t primes_checked = 0;
    uint64_t pairs_checked = 0;
    std::vector<CongruenceReport> failures;
    double elapsed = 0.0;  // wall seconds, excluded from determinism comparisons
    uint32_t worker_count = 1;
};

/// Smallest prime factor of n; returns n itself when n is prime or n < 2.
uint32_t smallest_factor(uint32_t n);

bool is_prime(uint32_t n);

/// All primes in [lo, hi] ascending, by sieve of Eratosthenes.
std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi);

/// The sum S(p,k) as an exact integer, before any reduction.  Works for any
/// odd p >= 3, prime or not.  Throws std::invalid_argument for even p, p < 3,
/// or k outside [1, (p-1)/2].
BigInt sum_exact_integer(uint32_t p, uint32_t k);

/// sum_exact_integer reduced mod p.  The big-integer oracle the kernels are
/// checked against.
uint32_t sum_exact(uint32_t p, uint32_t k);

/// S(p,k) mod p termwise: binom_mod per term plus a running power of 2.
/// Same argument checks as sum_exact; ctx must be built for prime p.
uint32_t sum_kernel_direct(const ModContext& ctx, uint32_t k);

/// S(p,k) mod p via the term recurrence T_1 = 1,
/// T_{i+1} = T_i * 2 * (k+i) * inv[i], with no factorial table reads in the
/// loop.  Same argument checks as sum_exact.
uint32_t sum_kernel_incremental(const ModContext& ctx, uint32_t k);

/// One report per k in [1, (p-1)/2], via the incremental kernel.  The caller
/// certifies p prime (see primes_in_range); for composite p the residues are
/// meaningless because the inverse tables are not.
std::vector<CongruenceReport> verify_prime(uint32_t p);

/// Checks every prime in [p_min, p_max] across `workers` threads and merges
/// the results in (p, k) order, so the report is identical for any worker
/// count.  When on_report is set it receives every report in that same order.
/// Throws std::invalid_argument for p_min < 3, p_min > p_max, or workers < 1.
SweepReport sweep(uint32_t p_min, uint32_t p_max, uint32_t workers,
                  const std::function<void(const CongruenceReport&)>& on_report = {});

/// Residues of S(n,k) for every odd composite n in [9, n_max] and every k in
/// [1, (n-1)/2], via the exact oracle (the modular kernels need a prime).
/// Purely informational; passed records residue == 0 without implying
/// anything.  Throws std::invalid_argument for n_max < 9 or even n_max.
std::vector<CongruenceReport> composite_scan(uint32_t n_max);

}  // namespace banach
