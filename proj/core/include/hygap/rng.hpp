#pragma once

#include <cstdint>

namespace hygap {

/// splitmix64 finalizer; the fixed mixing function behind every seeded
/// pipeline in this project (named in output metadata).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Stateless derivation of sub-seeds: mixes a stream tag into a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    return splitmix64(master ^ (0x9E3779B97F4A7C15ull * (tag + 1)));
}

/// Deterministic generator with a fixed algorithm (splitmix64 stream).
/// std distributions are avoided on purpose: their output is
/// implementation-defined, ours must be reproducible bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_++); }

    /// Uniform integer in [0, bound), bound >= 1. Rejection sampling on the
    /// top of the range keeps the distribution exactly uniform.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    /// Bernoulli(p) for p in [0,1]; exact at the endpoints.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        // 53-bit uniform in [0,1); enough resolution for a double p.
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return u < p;
    }

private:
    std::uint64_t state_;
};

}  // namespace hygap
