#pragma once

#include <cstdint>
#include <vector>

namespace banach {

/// Precomputed modular tables for one odd prime p.  Immutable after
/// construction; safe to share read-only across threads.
struct ModContext {
    uint32_t p = 0;
    std::vector<uint32_t> fact;      // fact[m] = m! mod p, 0 <= m <= p-1
    std::vector<uint32_t> inv_fact;  // inv_fact[m] = (m!)^-1 mod p
    std::vector<uint32_t> inv;       // inv[m] = m^-1 mod p, 1 <= m <= p-1; inv[0] unused
};

/// Builds all three tables in O(p).  Throws std::invalid_argument when p is
/// even, below 3, or at least 2^31.  Primality itself is the caller's
/// responsibility; the tables are only meaningful for prime p.
ModContext make_context(uint32_t p);

/// (a * b) mod p for reduced operands, 64-bit intermediate.
inline uint32_t mulmod(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

/// a^e mod p by square-and-multiply; powmod(a, 0, p) = 1.
uint32_t powmod(uint32_t a, uint64_t e, uint32_t p);

/// C(n, k) mod p from the factorial tables; 0 when k > n.  Throws
/// std::invalid_argument when n >= p (out of table range).
uint32_t binom_mod(const ModContext& ctx, uint32_t n, uint32_t k);

}  // namespace banach
