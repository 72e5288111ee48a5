#include "banach/modarith.hpp"

#include <stdexcept>
#include <string>

namespace banach {

ModContext make_context(uint32_t p) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("modulus must be an odd number >= 3, got " +
                                    std::to_string(p));
    }
    if (p >= (uint32_t{1} << 31)) {
        throw std::invalid_argument("modulus must be below 2^31, got " +
                                    std::to_string(p));
    }

    ModContext ctx;
    ctx.p = p;
    ctx.fact.resize(p);
    ctx.inv_fact.resize(p);
    ctx.inv.resize(p);

    ctx.fact[0] = 1;
    for (uint32_t m = 1; m < p; ++m) {
        ctx.fact[m] = mulmod(ctx.fact[m - 1], m, p);
    }

    // inv[m] = -(p/m) * inv[p mod m] mod p, the standard O(p) recurrence.
    ctx.inv[0] = 0;
    ctx.inv[1] = 1;
    for (uint32_t m = 2; m < p; ++m) {
        ctx.inv[m] = mulmod(p - p / m, ctx.inv[p % m], p);
    }

    ctx.inv_fact[0] = 1;
    for (uint32_t m = 1; m < p; ++m) {
        ctx.inv_fact[m] = mulmod(ctx.inv_fact[m - 1], ctx.inv[m], p);
    }
    return ctx;
}

uint32_t powmod(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t result = 1 % p;
    uint32_t base = a % p;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return result;
}

uint32_t binom_mod(const ModContext& ctx, uint32_t n, uint32_t k) {
    if (n >= ctx.p) {
        throw std::invalid_argument("binom_mod: n = " + std::to_string(n) +
                                    " is out of table range for p = " +
                                    std::to_string(ctx.p));
    }
    if (k > n) return 0;
    uint32_t r = mulmod(ctx.fact[n], ctx.inv_fact[k], ctx.p);
    return mulmod(r, ctx.inv_fact[n - k], ctx.p);
}

}  // namespace banach
