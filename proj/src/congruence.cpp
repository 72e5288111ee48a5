#include "banach/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <utility>

namespace banach {

namespace {

void check_pair(uint32_t p, uint32_t k) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("modulus must be an odd number >= 3, got " +
                                    std::to_string(p));
    }
    if (k < 1 || k > (p - 1) / 2) {
        throw std::invalid_argument("k must lie in [1, " +
                                    std::to_string((p - 1) / 2) + "] for p = " +
                                    std::to_string(p) + ", got " +
                                    std::to_string(k));
    }
}

}  // namespace

uint32_t smallest_factor(uint32_t n) {
    if (n < 4) return n;
    if (n % 2 == 0) return 2;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2) {
        if (n % d == 0) return d;
    }
    return n;
}

bool is_prime(uint32_t n) { return n >= 2 && smallest_factor(n) == n; }

std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi) {
    std::vector<uint32_t> primes;
    if (hi < 2 || lo > hi) return primes;
    std::vector<bool> composite(static_cast<size_t>(hi) + 1, false);
    for (uint64_t d = 2; d * d <= hi; ++d) {
        if (composite[d]) continue;
        for (uint64_t m = d * d; m <= hi; m += d) composite[m] = true;
    }
    for (uint64_t n = std::max<uint32_t>(lo, 2); n <= hi; ++n) {
        if (!composite[n]) primes.push_back(static_cast<uint32_t>(n));
    }
    return primes;
}

BigInt sum_exact_integer(uint32_t p, uint32_t k) {
    check_pair(p, k);
    const uint32_t terms = p - 2 * k - 1;
    BigInt sum;
    BigInt binom(1);  // C(k-1+i, k) at i = 1
    for (uint32_t i = 1; i <= terms; ++i) {
        sum += binom << (i - 1);
        if (i < terms) {
            // C(k+i, k) = C(k-1+i, k) * (k+i) / i, division exact.
            binom *= BigInt::from_u64(static_cast<uint64_t>(k) + i);
            binom /= BigInt::from_u64(i);
        }
    }
    return sum;
}

uint32_t sum_exact(uint32_t p, uint32_t k) {
    return sum_exact_integer(p, k).mod_u32(p);
}

uint32_t sum_kernel_direct(const ModContext& ctx, uint32_t k) {
    check_pair(ctx.p, k);
    const uint32_t p = ctx.p;
    const uint32_t terms = p - 2 * k - 1;
    uint32_t acc = 0;
    uint32_t pw = 1;  // 2^{i-1} mod p
    for (uint32_t i = 1; i <= terms; ++i) {
        acc = static_cast<uint32_t>(
            (acc + static_cast<uint64_t>(pw) * binom_mod(ctx, k - 1 + i, k)) % p);
        pw = mulmod(pw, 2, p);
    }
    return acc;
}

uint32_t sum_kernel_incremental(const ModContext& ctx, uint32_t k) {
    check_pair(ctx.p, k);
    const uint32_t p = ctx.p;
    const uint32_t terms = p - 2 * k - 1;
    uint32_t acc = 0;
    uint32_t term = 1 % p;  // T_1 = 2^0 * C(k, k)
    for (uint32_t i = 1; i <= terms; ++i) {
        acc = (acc + term) % p;
        // T_{i+1} = T_i * 2 * (k+i) / i; k+i < p, so only i needs inverting.
        uint64_t t = static_cast<uint64_t>(term) * 2 % p;
        t = t * (k + i) % p;
        t = t * ctx.inv[i] % p;
        term = static_cast<uint32_t>(t);
    }
    return acc;
}

std::vector<CongruenceReport> verify_prime(uint32_t p) {
    const ModContext ctx = make_context(p);
    const uint32_t k_max = (p - 1) / 2;
    std::vector<CongruenceReport> reports;
    reports.reserve(k_max);
    for (uint32_t k = 1; k <= k_max; ++k) {
        CongruenceReport r;
        r.p = p;
        r.k = k;
        r.term_count = p - 2 * k - 1;
        r.residue = sum_kernel_incremental(ctx, k);
        r.method = "incremental-kernel";
        r.passed = (r.residue == 0);
        reports.push_back(std::move(r));
    }
    return reports;
}

SweepReport sweep(uint32_t p_min, uint32_t p_max, uint32_t workers,
                  const std::function<void(const CongruenceReport&)>& on_report) {
    if (p_min < 3) {
        throw std::invalid_argument("sweep lower bound must be at least 3, got " +
                                    std::to_string(p_min));
    }
    if (p_min > p_max) {
        throw std::invalid_argument("sweep range is empty: " + std::to_string(p_min) +
                                    " > " + std::to_string(p_max));
    }
    if (workers < 1) {
        throw std::invalid_argument("worker count must be positive");
    }

    const auto start = std::chrono::steady_clock::now();

    SweepReport report;
    report.p_min = p_min;
    report.p_max = p_max;
    report.worker_count = workers;

    const std::vector<uint32_t> primes = primes_in_range(p_min, p_max);
    report.primes_checked = primes.size();

    // One slot per prime, indexed like `primes`.  Workers write disjoint
    // slots, so the merge below is free of scheduling effects.
    struct Slot {
        std::vector<CongruenceReport> reports;  // kept only when on_report is set
        std::vector<CongruenceReport> failures;
        uint64_t pairs = 0;
    };
    std::vector<Slot> slots(primes.size());
    const bool keep_all = static_cast<bool>(on_report);

    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= primes.size()) break;
            std::vector<CongruenceReport> reports = verify_prime(primes[idx]);
            Slot& slot = slots[idx];
            slot.pairs = reports.size();
            for (const CongruenceReport& r : reports) {
                if (!r.passed) slot.failures.push_back(r);
            }
            if (keep_all) slot.reports = std::move(reports);
        }
    };

    const size_t thread_count = std::min<size_t>(workers, primes.size());
    if (thread_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (size_t t = 0; t < thread_count; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    // Sequential merge in ascending prime order; within a prime the reports
    // are already sorted by k.
    for (Slot& slot : slots) {
        report.pairs_checked += slot.pairs;
        if (keep_all) {
            for (const CongruenceReport& r : slot.reports) on_report(r);
            slot.reports.clear();
        }
        for (CongruenceReport& r : slot.failures) {
            report.failures.push_back(std::move(r));
        }
    }

    report.elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CongruenceReport> composite_scan(uint32_t n_max) {
    if (n_max < 9) {
        throw std::invalid_argument("composite scan bound must be at least 9, got " +
                                    std::to_string(n_max));
    }
    if (n_max % 2 == 0) {
        throw std::invalid_argument("composite scan bound must be odd, got " +
                                    std::to_string(n_max));
    }
    std::vector<CongruenceReport> reports;
    for (uint32_t n = 9; n <= n_max; n += 2) {
        if (is_prime(n)) continue;
        for (uint32_t k = 1; k <= (n - 1) / 2; ++k) {
            CongruenceReport r;
            r.p = n;
            r.k = k;
            r.term_count = n - 2 * k - 1;
            r.residue = sum_exact(n, k);
            r.method = "exact-oracle";
            r.passed = (r.residue == 0);
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

}  // namespace banach
