// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <map>
#include <utility>
#include <vector>

#include <mcvt/config.hpp>
#include <mcvt/geometry.hpp>

namespace mcvt {

/// Per-frame box shifts keyed by detection index within the frame, used to
/// compensate object motion between consecutive frames. The shift stored at
/// (frame f, index i) moves box i of frame f toward its frame f+1 position.
class DisplacementField {
public:
    void set(int frame, int det_index, double dx, double dy);

    /// Missing entries are a zero shift.
    std::pair<double, double> shift(int frame, int det_index) const;

    bool empty() const { return shifts_.empty(); }

    const std::map<std::pair<int, int>, std::pair<double, double>>& entries() const {
        return shifts_;
    }

private:
    std::map<std::pair<int, int>, std::pair<double, double>> shifts_;
};

/// Detections of one frame, in input order.
struct FrameDetections {
    int frame = 0;
    std::vector<Detection> detections;
};

/// Groups a detection list by frame, ascending; input order is kept within
/// each frame.
std::vector<FrameDetections> group_by_frame(const std::vector<Detection>& detections);

/// Translates each box by its (dx, dy) from the field; sizes unchanged.
std::vector<BoundingBox> apply_compensation(const std::vector<BoundingBox>& boxes,
                                            const DisplacementField& field, int frame);

/// Maximum-overlap tracker: frame-to-frame greedy matching by descending
/// IoU against the previous frame's (optionally motion-compensated) boxes.
/// A detection with no admissible match starts a new id, so any one-frame
/// dropout splits a track.
CameraTrackSet track_overlap(const std::vector<FrameDetections>& frames,
                             double iou_match_threshold,
                             const DisplacementField* compensation = nullptr,
                             const CameraId& camera = "c1");

/// SORT tracker: per-frame Kalman prediction, one-to-one assignment
/// maximizing total IoU, and track termination after more than
/// sort_max_age consecutive unmatched frames. Output boxes are the
/// observed detections of matched frames.
CameraTrackSet track_sort(const std::vector<FrameDetections>& frames, const RunConfig& config,
                          const DisplacementField* compensation = nullptr,
                          const CameraId& camera = "c1");

}  // namespace mcvt
