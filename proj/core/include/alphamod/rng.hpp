#pragma once

#include <cstdint>

namespace alphamod {

/// Counter-based RNG: every draw is a pure function of (seed, counter),
/// so per-pair Bernoulli draws are reproducible under any evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(seed ^ splitmix64(a)) ^ splitmix64(b + 0x5851f42d4c957f2dULL));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform_at(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return uniform01(hash_combine(seed, a, b));
}

}  // namespace alphamod
