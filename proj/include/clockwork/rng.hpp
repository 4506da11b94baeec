#ifndef CLOCKWORK_RNG_HPP
#define CLOCKWORK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace clockwork {

/// SplitMix64 pseudorandom generator (Steele, Lea & Flood 2014).
///
/// Chosen as the project-wide generator because it is splittable: independent
/// streams are derived by hashing (master seed, stream index), so batches of
/// trajectories or bootstrap replicates get reproducible, order-independent
/// randomness. All variate transforms are implemented here rather than with
/// std::<distribution> types, which are not bit-stable across standard
/// libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for (master seed, stream index).
    static Rng stream(std::uint64_t master_seed, std::uint64_t stream_index) {
        return Rng(mix(master_seed + 0x9E3779B97F4A7C15ULL * (stream_index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Integer uniform in [0, bound) via rejection-free Lemire reduction.
    std::uint64_t below(std::uint64_t bound) {
        // 128-bit multiply keeps the mapping unbiased enough for bounds far
        // below 2^64 (bootstrap subset sizes, state counts).
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    double exponential(double rate) { return -std::log(uniform_open()) / rate; }

    /// Standard normal via Box-Muller; the paired variate is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open()));
        const double phi = 2.0 * std::numbers::pi * uniform();
        cached_ = r * std::sin(phi);
        has_cached_ = true;
        return r * std::cos(phi);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    /// Index drawn with probability weights[i] / sum(weights).
    int categorical(std::span<const double> weights, double total) {
        const double u = uniform() * total;
        double acc = 0.0;
        const int n = static_cast<int>(weights.size());
        for (int i = 0; i < n; ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        // Round-off fallthrough: return the last positively weighted index.
        for (int i = n - 1; i >= 0; --i) {
            if (weights[i] > 0.0) return i;
        }
        return n - 1;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace clockwork

#endif
