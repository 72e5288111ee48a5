#pragma once

#include <cstdint>
#include <vector>

namespace banach {

/// splitmix64: the 64-bit shift/multiply generator, seeded directly with the
/// given state.  Chosen because its output sequence is fully specified, so
/// counts reproduce bit-for-bit on any platform.
struct SplitMix64 {
    uint64_t state = 0;

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// One fair coin flip from the high bit of the next output.
    bool flip() { return (next() >> 63) != 0; }
};

/// One matchbox trial: both boxes start at n, a flip picks a box, and the
/// first pick of an empty box stops the process.  Returns the other box's
/// remaining count, in [0, n].  A trial consumes at most 2n+1 flips.
/// Templated so tests can substitute a flip-counting generator.
template <typename Rng>
uint32_t run_trial(uint32_t n, Rng& rng) {
    uint32_t first = n;
    uint32_t second = n;
    for (;;) {
        if (rng.flip()) {
            if (first == 0) return second;
            --first;
        } else {
            if (second == 0) return first;
            --second;
        }
    }
}

/// Outcome counts of a simulation run plus its fit against the exact
/// distribution.
struct SimulationResult {
    uint32_t n = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::vector<uint64_t> counts;  // counts[r], r = 0..n
    double tv_distance = 0.0;      // total variation vs the exact distribution
    double chi_square = 0.0;       // with low-expectation categories pooled

    bool operator==(const SimulationResult&) const = default;
};

/// Runs `trials` independent trials on one generator stream seeded with
/// `seed`.  Deterministic: the same (n, trials, seed) always produces the
/// same counts.  The empirical-vs-exact comparison stays in exact rational
/// arithmetic until the final conversion to double.  Throws
/// std::invalid_argument when trials is 0.
SimulationResult run(uint32_t n, uint64_t trials, uint64_t seed);

}  // namespace banach
