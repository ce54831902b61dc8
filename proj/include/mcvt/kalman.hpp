// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <Eigen/Dense>

#include <mcvt/geometry.hpp>

namespace mcvt {

using Vector7d = Eigen::Matrix<double, 7, 1>;
using Matrix7d = Eigen::Matrix<double, 7, 7>;

/// Constant-velocity box filter state, SORT layout:
/// (u, v, s, r, du, dv, ds) with u,v the box center in px, s the box area
/// in px^2 and r the aspect ratio w/h. The ratio carries no velocity.
struct KalmanState {
    Vector7d mean = Vector7d::Zero();
    Matrix7d covariance = Matrix7d::Identity();
};

// Fixed filter constants. Not part of RunConfig.
namespace kalman_constants {
inline const Vector7d process_noise_diag = (Vector7d() << 1.0, 1.0, 1.0, 1e-2, 1e-2, 1e-2, 1e-4).finished();
inline const Eigen::Vector4d observation_noise_diag{1.0, 1.0, 10.0, 1e-2};
inline constexpr double initial_position_variance = 10.0;
inline constexpr double initial_velocity_variance = 1e3;
}  // namespace kalman_constants

/// (u, v, s, r) measurement vector of a box.
Eigen::Vector4d box_to_measurement(const BoundingBox& b);

/// Inverse of box_to_measurement; requires s > 0 and r > 0.
BoundingBox measurement_to_box(const Eigen::Vector4d& z);

/// Box described by the state's (u, v, s, r).
BoundingBox state_box(const KalmanState& s);

/// Fresh state centered on a box, zero velocities.
KalmanState kalman_init(const BoundingBox& box);

/// Constant-velocity propagation with process noise. A predicted area
/// s + ds <= 0 zeroes the area velocity before propagating.
KalmanState kalman_predict(const KalmanState& state);

/// Linear-Gaussian correction against the (u, v, s, r) observation of a
/// box. The Joseph-form covariance update keeps the posterior symmetric
/// positive semidefinite.
KalmanState kalman_update(const KalmanState& state, const BoundingBox& observation);

}  // namespace mcvt
