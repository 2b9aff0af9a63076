#pragma once

#include <cstdint>

namespace varpi {

// SplitMix64 (Steele, Lea, Vigna): a fixed 64-bit generator with identical
// output on every platform. Streaming discipline: stream k of seed s starts
// from the state a generator seeded with s reaches after k steps, i.e.
// state = s + k * 0x9E3779B97F4A7C15.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

inline SplitMix64 rng_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64{seed + index * 0x9E3779B97F4A7C15ull};
}

// Decorrelated sub-seed for a (purpose tag, trial index) pair.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    SplitMix64 g = rng_stream(seed ^ (tag * 0xD1342543DE82EF95ull), index);
    return g.next();
}

}  // namespace varpi
