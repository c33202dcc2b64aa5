#pragma once

#include <cstdint>

namespace avalanche {

// SplitMix64 (Steele, Lea, Vigna). Chosen for the stochastic demo because its
// output is a pure function of the 64-bit seed, so runs reproduce bit-exactly
// on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) via rejection sampling.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0ULL - n) % n;
        std::uint64_t r = next();
        while (r < threshold) r = next();
        return r % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace avalanche
