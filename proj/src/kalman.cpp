// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/kalman.hpp>

#include <cmath>

namespace mcvt {

namespace {

Matrix7d transition_matrix() {
    Matrix7d f = Matrix7d::Identity();
    f(0, 4) = 1.0;  // u += du
    f(1, 5) = 1.0;  // v += dv
    f(2, 6) = 1.0;  // s += ds
    return f;
}

Eigen::Matrix<double, 4, 7> observation_matrix() {
    Eigen::Matrix<double, 4, 7> h = Eigen::Matrix<double, 4, 7>::Zero();
    h(0, 0) = 1.0;
    h(1, 1) = 1.0;
    h(2, 2) = 1.0;
    h(3, 3) = 1.0;
    return h;
}

}  // namespace

Eigen::Vector4d box_to_measurement(const BoundingBox& b) {
    const auto [cx, cy] = center(b);
    return {cx, cy, b.area(), b.width / b.height};
}

BoundingBox measurement_to_box(const Eigen::Vector4d& z) {
    const double w = std::sqrt(z(2) * z(3));
    const double h = z(2) / w;
    return {z(0) - w / 2.0, z(1) - h / 2.0, w, h};
}

BoundingBox state_box(const KalmanState& s) {
    return measurement_to_box(s.mean.head<4>());
}

KalmanState kalman_init(const BoundingBox& box) {
    KalmanState s;
    s.mean.head<4>() = box_to_measurement(box);
    s.covariance = Matrix7d::Zero();
    for (int i = 0; i < 4; ++i) {
        s.covariance(i, i) = kalman_constants::initial_position_variance;
    }
    for (int i = 4; i < 7; ++i) {
        s.covariance(i, i) = kalman_constants::initial_velocity_variance;
    }
    return s;
}

KalmanState kalman_predict(const KalmanState& state) {
    KalmanState s = state;
    if (s.mean(2) + s.mean(6) <= 0.0) {
        s.mean(6) = 0.0;
    }
    const Matrix7d f = transition_matrix();
    s.mean = f * s.mean;
    s.covariance = f * s.covariance * f.transpose();
    s.covariance += kalman_constants::process_noise_diag.asDiagonal();
    return s;
}

KalmanState kalman_update(const KalmanState& state, const BoundingBox& observation) {
    const Eigen::Matrix<double, 4, 7> h = observation_matrix();
    const Eigen::Matrix4d r = kalman_constants::observation_noise_diag.asDiagonal();

    const Eigen::Vector4d innovation = box_to_measurement(observation) - h * state.mean;
    const Eigen::Matrix4d s = h * state.covariance * h.transpose() + r;
    const Eigen::Matrix<double, 7, 4> gain =
        state.covariance * h.transpose() * s.inverse();

    KalmanState out = state;
    out.mean += gain * innovation;
    const Matrix7d ikh = Matrix7d::Identity() - gain * h;
    out.covariance = ikh * state.covariance * ikh.transpose() + gain * r * gain.transpose();
    return out;
}

}  // namespace mcvt
