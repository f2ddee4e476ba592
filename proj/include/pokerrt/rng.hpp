#pragma once

#include <cstdint>
#include <random>

namespace pokerrt {

// SplitMix64 scramble (Steele, Lea, Vigna). Stable across platforms; used
// for seed derivation so any trial/replan stream can be reconstructed in
// isolation.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Stable 64-bit seed mixing: stream `b` derived from master seed `a`.
constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

/// Deterministic random source. The engine (mt19937_64) has a
/// standard-defined output sequence; conversions to doubles are done by
/// hand, so identical seeds give identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    /// Standard normal via Box-Muller (deterministic, no caching).
    double normal() {
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) {
        return mean + stddev * normal();
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pokerrt
