#include "banach/simulate.hpp"

#include <stdexcept>

#include "banach/bigint.hpp"
#include "banach/matchbox.hpp"
#include "banach/rational.hpp"

namespace banach {

SimulationResult run(uint32_t n, uint64_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("trial count must be positive");
    }

    SimulationResult result;
    result.n = n;
    result.trials = trials;
    result.seed = seed;
    result.counts.assign(static_cast<size_t>(n) + 1, 0);

    SplitMix64 rng{seed};
    for (uint64_t t = 0; t < trials; ++t) {
        ++result.counts[run_trial(n, rng)];
    }

    const MatchboxDistribution exact = distribution(n);
    const Rational trials_rat(BigInt::from_u64(trials));

    // Total variation in exact rationals, converted to double once at the end.
    Rational tv;
    for (uint32_t r = 0; r <= n; ++r) {
        Rational diff =
            Rational(BigInt::from_u64(result.counts[r])) / trials_rat - exact.probs[r];
        if (diff.sign() < 0) diff = -diff;
        tv += diff;
    }
    tv /= Rational(2);
    result.tv_distance = tv.to_double();

    // Chi-square over categories pooled so every expected count reaches 5,
    // merging the sparse high-r tail downward; r = 0 pools upward if needed.
    std::vector<double> observed(result.counts.begin(), result.counts.end());
    std::vector<double> expected(n + 1);
    for (uint32_t r = 0; r <= n; ++r) {
        expected[r] = static_cast<double>(trials) * exact.probs[r].to_double();
    }
    for (uint32_t r = n; r > 0; --r) {
        if (expected[r] < 5.0) {
            expected[r - 1] += expected[r];
            observed[r - 1] += observed[r];
            expected[r] = 0.0;
        }
    }
    if (expected[0] < 5.0) {
        for (uint32_t r = 1; r <= n; ++r) {
            if (expected[r] > 0.0) {
                expected[r] += expected[0];
                observed[r] += observed[0];
                expected[0] = 0.0;
                break;
            }
        }
    }
    double chi2 = 0.0;
    for (uint32_t r = 0; r <= n; ++r) {
        if (expected[r] > 0.0) {
            const double delta = observed[r] - expected[r];
            chi2 += delta * delta / expected[r];
        }
    }
    result.chi_square = chi2;

    return result;
}

}  // namespace banach
