// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/geometry.hpp>

#include <algorithm>

namespace mcvt {

std::size_t CameraTrackSet::total_boxes() const {
    std::size_t n = 0;
    for (const auto& t : tracks) {
        n += t.boxes.size();
    }
    return n;
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double iw = std::min(a.right(), b.right()) - std::max(a.left, b.left);
    const double ih = std::min(a.bottom(), b.bottom()) - std::max(a.top, b.top);
    if (iw <= 0.0 || ih <= 0.0) {
        return 0.0;
    }
    const double inter = iw * ih;
    return inter / (a.area() + b.area() - inter);
}

std::pair<double, double> center(const BoundingBox& b) {
    return {b.left + b.width / 2.0, b.top + b.height / 2.0};
}

}  // namespace mcvt
