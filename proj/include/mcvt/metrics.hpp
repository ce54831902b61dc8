// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <mcvt/geometry.hpp>

namespace mcvt {

/// Detection and identity scores for one camera. A ratio whose denominator
/// is zero is 1 by convention, so empty-vs-empty input scores perfectly.
struct EvalReport {
    double idf1 = 0.0;
    double idp = 0.0;
    double idr = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double ap = 0.0;
    std::int64_t idtp = 0;
    std::int64_t idfp = 0;
    std::int64_t idfn = 0;
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
};

/// IoU-gated one-to-one matching within one frame: predictions in
/// descending confidence (ties by index), each taking the unmatched
/// ground-truth box of highest IoU at or above the threshold.
/// Returns (gt_index, pred_index) pairs.
std::vector<std::pair<int, int>> match_frame(
    const std::vector<BoundingBox>& gt,
    const std::vector<std::pair<BoundingBox, double>>& pred, double iou_threshold);

/// Pascal-style average precision over all frames with all-point
/// interpolation. Zero ground truth scores 1 without predictions and 0
/// with them.
double average_precision(const std::vector<Detection>& gt, const std::vector<Detection>& pred,
                         double iou_threshold = 0.5);

struct DetectionPr {
    double precision = 1.0;
    double recall = 1.0;
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
};

/// Per-frame greedy matching totals.
DetectionPr detection_pr(const std::vector<Detection>& gt, const std::vector<Detection>& pred,
                         double iou_threshold = 0.5);

/// IDF1 family via the global minimum-cost truth-to-hypothesis assignment:
/// each (gt, pred) trajectory pair is charged the frames where it fails to
/// correspond (per-frame correspondence is IoU >= threshold) and unmatched
/// trajectories are charged their full length. Also fills the detection
/// precision/recall fields; ap is left zero.
EvalReport id_metrics(const CameraTrackSet& gt, const CameraTrackSet& pred,
                      double iou_threshold = 0.5);

/// All boxes of a track set as confidence-1 detections.
std::vector<Detection> flatten(const CameraTrackSet& tracks);

}  // namespace mcvt
