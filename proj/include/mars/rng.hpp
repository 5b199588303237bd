#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mars {

// SplitMix64 finalizer. Used both as a seed scrambler and as the frozen
// per-run sub-seed scheme: sub_seed(base, i) hashes the i-th point of the
// SplitMix64 stream starting at `base`. The scheme is part of the
// reproducibility contract; ports must match it to replay seeded batches.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t base_seed, std::uint64_t run_index) {
    return splitmix64(base_seed + run_index * 0x9E3779B97F4A7C15ull);
}

// All stochastic components draw through this wrapper so that the stream is
// pinned to mt19937_64 plus the exact conversions below, independent of the
// standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in the open interval (0, 1): 53-bit mantissa, offset by half an ulp.
    double uniform_open01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform in the open interval (-1, 1).
    double uniform_open_sym() { return 2.0 * uniform_open01() - 1.0; }

    // Uniform in (lo, hi).
    double uniform(double lo, double hi) { return lo + uniform_open01() * (hi - lo); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Lemire-style rejection to kill modulo bias.
        std::uint64_t x = engine_();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t t = -n % n;
            while (lo < t) {
                x = engine_();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Standard normal via basic Box-Muller (frozen; do not swap for
    // std::normal_distribution, which is implementation-defined).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open01();
        const double u2 = uniform_open01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    int8_t coin_spin() { return (engine_() >> 63) ? int8_t{1} : int8_t{-1}; }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mars
