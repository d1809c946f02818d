#pragma once

#include <cstdint>
#include <random>

namespace theta {

/// Every random choice in the library draws from this engine, seeded from
/// the user's seed; nothing reads the clock or OS entropy.
using Rng = std::mt19937_64;

/// SplitMix64 finaliser over (seed, stream): independent per-item seeds, so
/// parallel loops draw the same values regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform value in [0, bound) by rejection; bound > 0. Portable across
/// standard libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace theta
