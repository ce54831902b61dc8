// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <cstdint>
#include <random>

namespace mcvt {

/// Seeded random source used wherever the library needs randomness.
///
/// The engine is std::mt19937_64, whose output stream is fixed by the
/// standard. The distributions are implemented here rather than taken
/// from <random> because the standard ones are not bit-exact across
/// library implementations, and seeded outputs feed reproducible tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], both inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Standard normal deviate via Box-Muller; consumes two uniforms.
    double gaussian();

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

    /// Bernoulli draw with success probability p.
    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace mcvt
