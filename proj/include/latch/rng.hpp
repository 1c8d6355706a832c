#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace latch {

/// Seeded RNG used wherever the library promises "deterministic for a fixed
/// seed". The engine is std::mt19937_64 (portable bit stream); the draw
/// helpers below avoid std::*_distribution, whose outputs differ between
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). n must be > 0. Modulo reduction; the bias
    /// is < 2^-32 for the small ranges used here.
    std::uint32_t bounded(std::uint32_t n) {
        return static_cast<std::uint32_t>(next() % n);
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal deviate (Box-Muller, both draws consumed every call).
    double gaussian() {
        double u1 = unit();
        double u2 = unit();
        while (u1 == 0.0) u1 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace latch
