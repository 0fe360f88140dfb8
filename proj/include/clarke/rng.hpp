#pragma once

#include <cstdint>
#include <random>

namespace clarke {

/**
 * Deterministic uniform generator: mt19937_64 with an explicit 53-bit
 * conversion to doubles, so seeded streams are bit-identical across
 * platforms (std::uniform_real_distribution is not).
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Decorrelated seed for sub-stream `stream` of a base seed (goal draw,
/// plant noise, ... within one segment).
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base + 0x9E3779B97F4A7C15ull * (stream + 1));
}

}  // namespace clarke
