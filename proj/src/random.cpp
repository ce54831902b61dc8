// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/random.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mcvt {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    const double span = static_cast<double>(hi - lo) + 1.0;
    const auto offset = static_cast<std::int64_t>(uniform() * span);
    return std::min(lo + offset, hi);
}

double Rng::gaussian() {
    // u1 in (0, 1] keeps the log argument away from zero.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace mcvt
