#ifndef RELROOTS_RNG_HPP
#define RELROOTS_RNG_HPP

#include <cstdint>

namespace relroots {

/// SplitMix64: tiny, seedable, portable. Survey streams must be reproducible
/// byte-for-byte across platforms, so all sampling goes through 64-bit
/// integer compares, never floating point.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): 53 mantissa bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi] inclusive (hi > lo), by rejection-free modulo
    /// (bias is irrelevant at the ranges used here, but keep it documented).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

/// Stream-split rule: the generator for trial i is SplitMix64 seeded with
/// mix(seed XOR (i+1) * golden ratio), so per-trial streams depend only on
/// (seed, trial index) and trials can run in any order.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 seeder{seed ^ ((trial + 1) * 0x9E3779B97F4A7C15ULL)};
    return SplitMix64{seeder.next()};
}

/// Threshold for "include with probability rho" as a 64-bit compare.
inline std::uint64_t gnp_threshold(double rho) {
    if (rho >= 1.0) return ~0ULL;
    if (rho <= 0.0) return 0;
    return static_cast<std::uint64_t>(rho * 18446744073709551616.0 /* 2^64 */);
}

/// Adds each pair {i, j}, i < j in lexicographic order, independently with
/// probability rho. Draws exactly one 64-bit word per pair. `g` must expose
/// `n` and `add_edge`.
template <typename GraphT>
void sample_gnp_edges(GraphT& g, double rho, SplitMix64& rng) {
    const std::uint64_t threshold = gnp_threshold(rho);
    const bool always = rho >= 1.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            std::uint64_t draw = rng.next();
            if (always || draw < threshold) g.add_edge(i, j);
        }
}

}  // namespace relroots

#endif
