// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/metrics.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include <mcvt/assignment.hpp>

namespace mcvt {

namespace {

double safe_ratio(std::int64_t num, std::int64_t den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 1.0;
}

struct FrameSlice {
    std::vector<std::pair<int, BoundingBox>> gt;    // (track index, box)
    std::vector<std::pair<int, BoundingBox>> pred;  // (track index, box)
};

}  // namespace

std::vector<std::pair<int, int>> match_frame(
    const std::vector<BoundingBox>& gt,
    const std::vector<std::pair<BoundingBox, double>>& pred, double iou_threshold) {
    std::vector<int> order(pred.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pred[a].second > pred[b].second; });

    std::vector<char> gt_used(gt.size(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (const int p : order) {
        int best_gt = -1;
        double best_iou = 0.0;
        for (std::size_t g = 0; g < gt.size(); ++g) {
            if (gt_used[g]) {
                continue;
            }
            const double overlap = iou(gt[g], pred[p].first);
            if (overlap > best_iou) {
                best_iou = overlap;
                best_gt = static_cast<int>(g);
            }
        }
        if (best_gt >= 0 && best_iou >= iou_threshold) {
            gt_used[best_gt] = 1;
            pairs.emplace_back(best_gt, p);
        }
    }
    return pairs;
}

double average_precision(const std::vector<Detection>& gt, const std::vector<Detection>& pred,
                         double iou_threshold) {
    if (gt.empty()) {
        return pred.empty() ? 1.0 : 0.0;
    }
    if (pred.empty()) {
        return 0.0;
    }

    std::map<int, std::vector<BoundingBox>> gt_frames;
    for (const auto& d : gt) {
        gt_frames[d.frame].push_back(d.bbox);
    }
    std::map<int, std::vector<std::pair<BoundingBox, double>>> pred_frames;
    for (const auto& d : pred) {
        pred_frames[d.frame].emplace_back(d.bbox, d.confidence);
    }

    // Per-frame greedy matching decides which predictions are true
    // positives; the curve itself is accumulated in global confidence
    // order (file order on ties).
    struct Scored {
        double confidence;
        bool is_tp;
    };
    std::vector<Scored> scored;
    scored.reserve(pred.size());
    static const std::vector<BoundingBox> kNoBoxes;
    for (const auto& [frame, preds] : pred_frames) {
        const auto git = gt_frames.find(frame);
        const auto& boxes = git == gt_frames.end() ? kNoBoxes : git->second;
        std::vector<char> matched(preds.size(), 0);
        for (const auto& [g, p] : match_frame(boxes, preds, iou_threshold)) {
            matched[p] = 1;
        }
        for (std::size_t p = 0; p < preds.size(); ++p) {
            scored.push_back({preds[p].second, matched[p] != 0});
        }
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const Scored& a, const Scored& b) { return a.confidence > b.confidence; });

    const auto total_gt = static_cast<double>(gt.size());
    std::vector<double> precision(scored.size());
    std::vector<double> recall(scored.size());
    std::int64_t tp = 0;
    for (std::size_t i = 0; i < scored.size(); ++i) {
        tp += scored[i].is_tp ? 1 : 0;
        precision[i] = static_cast<double>(tp) / static_cast<double>(i + 1);
        recall[i] = static_cast<double>(tp) / total_gt;
    }

    // All-point interpolation: precision made non-increasing from the
    // right, then summed over recall increments.
    for (std::size_t i = precision.size() - 1; i-- > 0;) {
        precision[i] = std::max(precision[i], precision[i + 1]);
    }
    double ap = 0.0;
    double prev_recall = 0.0;
    for (std::size_t i = 0; i < scored.size(); ++i) {
        ap += (recall[i] - prev_recall) * precision[i];
        prev_recall = recall[i];
    }
    return ap;
}

DetectionPr detection_pr(const std::vector<Detection>& gt, const std::vector<Detection>& pred,
                         double iou_threshold) {
    std::map<int, std::vector<BoundingBox>> gt_frames;
    for (const auto& d : gt) {
        gt_frames[d.frame].push_back(d.bbox);
    }
    std::map<int, std::vector<std::pair<BoundingBox, double>>> pred_frames;
    for (const auto& d : pred) {
        pred_frames[d.frame].emplace_back(d.bbox, d.confidence);
    }

    std::int64_t tp = 0;
    static const std::vector<BoundingBox> kNoBoxes;
    for (const auto& [frame, preds] : pred_frames) {
        const auto git = gt_frames.find(frame);
        const auto& boxes = git == gt_frames.end() ? kNoBoxes : git->second;
        tp += static_cast<std::int64_t>(match_frame(boxes, preds, iou_threshold).size());
    }

    DetectionPr out;
    out.tp = tp;
    out.fp = static_cast<std::int64_t>(pred.size()) - tp;
    out.fn = static_cast<std::int64_t>(gt.size()) - tp;
    out.precision = safe_ratio(out.tp, out.tp + out.fp);
    out.recall = safe_ratio(out.tp, out.tp + out.fn);
    return out;
}

EvalReport id_metrics(const CameraTrackSet& gt, const CameraTrackSet& pred,
                      double iou_threshold) {
    const int n_gt = static_cast<int>(gt.tracks.size());
    const int n_pred = static_cast<int>(pred.tracks.size());

    // Frames in which each (gt, pred) trajectory pair corresponds.
    std::map<int, FrameSlice> frames;
    for (int g = 0; g < n_gt; ++g) {
        for (const auto& [frame, box] : gt.tracks[g].boxes) {
            frames[frame].gt.emplace_back(g, box);
        }
    }
    for (int p = 0; p < n_pred; ++p) {
        for (const auto& [frame, box] : pred.tracks[p].boxes) {
            frames[frame].pred.emplace_back(p, box);
        }
    }
    std::vector<std::int64_t> m(static_cast<std::size_t>(n_gt) * std::max(n_pred, 1), 0);
    for (const auto& [frame, slice] : frames) {
        for (const auto& [g, gbox] : slice.gt) {
            for (const auto& [p, pbox] : slice.pred) {
                if (iou(gbox, pbox) >= iou_threshold) {
                    ++m[static_cast<std::size_t>(g) * n_pred + p];
                }
            }
        }
    }

    std::vector<std::int64_t> gt_len(n_gt), pred_len(n_pred);
    std::int64_t total_gt = 0, total_pred = 0;
    for (int g = 0; g < n_gt; ++g) {
        gt_len[g] = static_cast<std::int64_t>(gt.tracks[g].boxes.size());
        total_gt += gt_len[g];
    }
    for (int p = 0; p < n_pred; ++p) {
        pred_len[p] = static_cast<std::int64_t>(pred.tracks[p].boxes.size());
        total_pred += pred_len[p];
    }

    // Square cost over (gt + null) x (pred + null): a real pair costs its
    // false-negative plus false-positive frames, a trajectory against its
    // own null costs its full length, and cross-null cells are barred by a
    // finite big-M (feasibility is guaranteed through the diagonal nulls).
    std::int64_t idtp = 0;
    if (n_gt > 0 || n_pred > 0) {
        const int n = n_gt + n_pred;
        const double big = 4.0 * static_cast<double>(total_gt + total_pred) + 1.0;
        std::vector<double> cost(static_cast<std::size_t>(n) * n, big);
        for (int g = 0; g < n_gt; ++g) {
            for (int p = 0; p < n_pred; ++p) {
                const std::int64_t overlap = m[static_cast<std::size_t>(g) * n_pred + p];
                cost[static_cast<std::size_t>(g) * n + p] =
                    static_cast<double>(gt_len[g] + pred_len[p] - 2 * overlap);
            }
            cost[static_cast<std::size_t>(g) * n + (n_pred + g)] =
                static_cast<double>(gt_len[g]);
        }
        for (int p = 0; p < n_pred; ++p) {
            cost[static_cast<std::size_t>(n_gt + p) * n + p] = static_cast<double>(pred_len[p]);
        }
        for (int g = 0; g < n_gt; ++g) {
            for (int p = 0; p < n_pred; ++p) {
                cost[static_cast<std::size_t>(n_gt + p) * n + (n_pred + g)] = 0.0;
            }
        }

        const std::vector<int> assigned = solve_assignment(cost, n, n);
        for (int g = 0; g < n_gt; ++g) {
            const int p = assigned[g];
            if (p >= 0 && p < n_pred) {
                idtp += m[static_cast<std::size_t>(g) * n_pred + p];
            }
        }
    }

    EvalReport report;
    report.idtp = idtp;
    report.idfp = total_pred - idtp;
    report.idfn = total_gt - idtp;
    report.idf1 = safe_ratio(2 * report.idtp, 2 * report.idtp + report.idfp + report.idfn);
    report.idp = safe_ratio(report.idtp, report.idtp + report.idfp);
    report.idr = safe_ratio(report.idtp, report.idtp + report.idfn);

    const DetectionPr pr = detection_pr(flatten(gt), flatten(pred), iou_threshold);
    report.precision = pr.precision;
    report.recall = pr.recall;
    report.tp = pr.tp;
    report.fp = pr.fp;
    report.fn = pr.fn;
    return report;
}

std::vector<Detection> flatten(const CameraTrackSet& tracks) {
    std::vector<Detection> out;
    out.reserve(tracks.total_boxes());
    for (const auto& t : tracks.tracks) {
        for (const auto& [frame, box] : t.boxes) {
            out.push_back({frame, box, 1.0});
        }
    }
    return out;
}

}  // namespace mcvt
