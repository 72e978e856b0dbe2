#pragma once

#include <cstdint>
#include <random>

namespace roadcov {

// All randomness flows through RandomStream so that every draw is
// reproducible from a 64-bit seed, independent of platform and of the
// standard library's distribution implementations. The engine is
// std::mt19937_64 (bit-exact across conforming implementations); the
// distributions below are fixed algorithms layered on its raw output.

/// SplitMix64 output for the given state (Steele/Lea/Flood generator,
/// Vigna's reference implementation). Used both as a seed scrambler and
/// as the per-stream seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed of the random stream owned by realization `stream_index`:
/// the (stream_index + 1)-th output of a SplitMix64 sequence seeded with
/// `master_seed`. Random access lets realizations run in any order or in
/// parallel while drawing from identical streams.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                           std::uint64_t stream_index) {
    constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ull;
    return splitmix64(master_seed + (stream_index + 1) * gamma);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Poisson-distributed count via Knuth's product method. Means above
    /// 500 are split using Poisson additivity to avoid exp() underflow.
    int poisson(double mean);

    /// Gaussian via Box-Muller; always consumes exactly two uniforms.
    double normal(double mean, double stddev);

private:
    int poisson_knuth(double mean);

    std::mt19937_64 engine_;
};

} // namespace roadcov
