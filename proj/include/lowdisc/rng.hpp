#pragma once

#include <cstdint>

namespace lowdisc {

// splitmix64 (Steele, Lea, Vigna). Chosen for random_set and restarts: tiny,
// splittable by seed arithmetic, published constants. Identity is recorded in
// generator metadata as "splitmix64".
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform on [0,1) with 53 random bits
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound), rejection-free modulo bias is acceptable
    // for the small bounds used here (restart slot selection)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

inline constexpr const char* kRngIdentity = "splitmix64";

}  // namespace lowdisc
