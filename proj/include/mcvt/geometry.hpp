// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mcvt {

using CameraId = std::string;

/// Axis-aligned box in pixel coordinates: (left, top) corner plus size.
/// Boxes are continuous rectangles; area is width * height with no pixel
/// correction.
struct BoundingBox {
    double left = 0.0;
    double top = 0.0;
    double width = 0.0;
    double height = 0.0;

    double right() const { return left + width; }
    double bottom() const { return top + height; }
    double area() const { return width * height; }

    bool valid() const {
        return width > 0.0 && height > 0.0 && std::isfinite(left) &&
               std::isfinite(top) && std::isfinite(width) && std::isfinite(height);
    }

    bool operator==(const BoundingBox&) const = default;
};

/// One detector output. Frames are 1-based, matching the file formats.
struct Detection {
    int frame = 0;
    BoundingBox bbox;
    double confidence = 1.0;

    bool operator==(const Detection&) const = default;
};

struct TrackedBox {
    int frame = 0;
    BoundingBox bbox;
    int track_id = 0;

    bool operator==(const TrackedBox&) const = default;
};

/// One identity's per-frame boxes within a single camera.
/// Invariant: boxes non-empty, frames strictly increasing.
struct Track {
    int id = 0;
    CameraId camera;
    std::vector<std::pair<int, BoundingBox>> boxes;

    int first_frame() const { return boxes.front().first; }
    int last_frame() const { return boxes.back().first; }

    bool operator==(const Track&) const = default;
};

/// All tracks of one camera. Track ids are unique within the set.
struct CameraTrackSet {
    CameraId camera;
    std::vector<Track> tracks;

    std::size_t total_boxes() const;

    bool operator==(const CameraTrackSet&) const = default;
};

/// Intersection over union of two boxes, in [0, 1]. Touching edges count
/// as no overlap.
double iou(const BoundingBox& a, const BoundingBox& b);

/// Box center (cx, cy).
std::pair<double, double> center(const BoundingBox& b);

}  // namespace mcvt
