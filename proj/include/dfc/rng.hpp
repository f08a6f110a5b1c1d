#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dfc {

/// Seeded random generator with explicit transforms so that sampled streams
/// depend only on the seed, not on library internals. Gaussians use
/// Box-Muller with a cached second value.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(2.0 * M_PI * u2);
        has_cached_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Gaussian truncated to [-bound, bound] by resampling (falls back to a
    /// clamp after 256 attempts for pathological bound/stddev ratios).
    double truncated_normal(double stddev, double bound) {
        if (stddev <= 0.0) return 0.0;
        for (int i = 0; i < 256; ++i) {
            const double x = normal(0.0, stddev);
            if (std::abs(x) <= bound) return x;
        }
        return bound;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Independent child stream; deterministic in (seed, index).
    RandomGen child(std::uint64_t index) const {
        return RandomGen(mix(seed_ ^ mix(index + 0x9e3779b97f4a7c15ULL)));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

} // namespace dfc
