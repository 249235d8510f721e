#pragma once

#include <cstdint>

namespace qlat {

// SplitMix64: tiny deterministic generator, identical output on every
// platform for a given seed. Corpus reproducibility depends on this, so
// no standard-library distributions are used anywhere.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

    // Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
};

}  // namespace qlat
