// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/tracking.hpp>

#include <algorithm>
#include <stdexcept>

#include <mcvt/assignment.hpp>
#include <mcvt/kalman.hpp>

namespace mcvt {

namespace {

BoundingBox translated(const BoundingBox& b, double dx, double dy) {
    return {b.left + dx, b.top + dy, b.width, b.height};
}

void check_frames_ascending(const std::vector<FrameDetections>& frames) {
    for (std::size_t i = 1; i < frames.size(); ++i) {
        if (frames[i].frame <= frames[i - 1].frame) {
            throw std::invalid_argument("frame lists must be ordered by ascending frame index");
        }
    }
}

// Admissible match: overlapping at all and at or above the gate.
bool admissible(double overlap, double threshold) {
    return overlap > 0.0 && overlap >= threshold;
}

// One-to-one assignment maximizing total IoU over the given matrix
// (rows x cols, row-major). Pairs failing the gate are dropped afterwards,
// mirroring the SORT association. Returns row -> col or -1.
std::vector<int> associate_max_iou(const std::vector<double>& overlap, int rows, int cols,
                                   double threshold) {
    std::vector<double> cost(overlap.size());
    for (std::size_t i = 0; i < overlap.size(); ++i) {
        cost[i] = -overlap[i];
    }
    std::vector<int> match = solve_assignment(cost, rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (match[r] >= 0 && !admissible(overlap[r * cols + match[r]], threshold)) {
            match[r] = -1;
        }
    }
    return match;
}

}  // namespace

void DisplacementField::set(int frame, int det_index, double dx, double dy) {
    shifts_[{frame, det_index}] = {dx, dy};
}

std::pair<double, double> DisplacementField::shift(int frame, int det_index) const {
    const auto it = shifts_.find({frame, det_index});
    return it == shifts_.end() ? std::pair{0.0, 0.0} : it->second;
}

std::vector<FrameDetections> group_by_frame(const std::vector<Detection>& detections) {
    std::map<int, std::vector<Detection>> grouped;
    for (const auto& d : detections) {
        grouped[d.frame].push_back(d);
    }
    std::vector<FrameDetections> out;
    out.reserve(grouped.size());
    for (auto& [frame, dets] : grouped) {
        out.push_back({frame, std::move(dets)});
    }
    return out;
}

std::vector<BoundingBox> apply_compensation(const std::vector<BoundingBox>& boxes,
                                            const DisplacementField& field, int frame) {
    std::vector<BoundingBox> out;
    out.reserve(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto [dx, dy] = field.shift(frame, static_cast<int>(i));
        out.push_back(translated(boxes[i], dx, dy));
    }
    return out;
}

CameraTrackSet track_overlap(const std::vector<FrameDetections>& frames,
                             double iou_match_threshold, const DisplacementField* compensation,
                             const CameraId& camera) {
    check_frames_ascending(frames);

    std::map<int, Track> tracks;
    int next_id = 1;

    int prev_frame = 0;
    std::vector<BoundingBox> prev_boxes;
    std::vector<int> prev_ids;

    for (const auto& fd : frames) {
        std::vector<BoundingBox> reference = prev_boxes;
        const bool consecutive = !prev_boxes.empty() && fd.frame == prev_frame + 1;
        if (consecutive && compensation != nullptr) {
            reference = apply_compensation(reference, *compensation, prev_frame);
        }

        const std::size_t n_cur = fd.detections.size();
        std::vector<int> assigned_id(n_cur, 0);

        if (consecutive && n_cur > 0) {
            // All admissible pairs, greedily consumed by descending IoU.
            // Equal IoU breaks toward the lower previous id, then the lower
            // detection index, keeping the result deterministic.
            struct Candidate {
                double overlap;
                int prev_id;
                int cur;
                int prev;
            };
            std::vector<Candidate> candidates;
            for (std::size_t p = 0; p < reference.size(); ++p) {
                for (std::size_t c = 0; c < n_cur; ++c) {
                    const double overlap = iou(reference[p], fd.detections[c].bbox);
                    if (admissible(overlap, iou_match_threshold)) {
                        candidates.push_back({overlap, prev_ids[p], static_cast<int>(c),
                                              static_cast<int>(p)});
                    }
                }
            }
            std::sort(candidates.begin(), candidates.end(),
                      [](const Candidate& a, const Candidate& b) {
                          if (a.overlap != b.overlap) return a.overlap > b.overlap;
                          if (a.prev_id != b.prev_id) return a.prev_id < b.prev_id;
                          return a.cur < b.cur;
                      });
            std::vector<char> prev_used(reference.size(), 0);
            for (const auto& cand : candidates) {
                if (prev_used[cand.prev] || assigned_id[cand.cur] != 0) {
                    continue;
                }
                prev_used[cand.prev] = 1;
                assigned_id[cand.cur] = cand.prev_id;
            }
        }

        std::vector<int> cur_ids(n_cur, 0);
        for (std::size_t c = 0; c < n_cur; ++c) {
            int id = assigned_id[c];
            if (id == 0) {
                id = next_id++;
                tracks.emplace(id, Track{id, camera, {}});
            }
            cur_ids[c] = id;
            tracks.at(id).boxes.emplace_back(fd.frame, fd.detections[c].bbox);
        }

        prev_frame = fd.frame;
        prev_boxes.clear();
        prev_ids = std::move(cur_ids);
        for (const auto& d : fd.detections) {
            prev_boxes.push_back(d.bbox);
        }
    }

    CameraTrackSet out{camera, {}};
    out.tracks.reserve(tracks.size());
    for (auto& [id, track] : tracks) {
        out.tracks.push_back(std::move(track));
    }
    return out;
}

namespace {

struct SortTrack {
    int id = 0;
    KalmanState state;
    int time_since_update = 0;
    int hit_streak = 0;
    int last_matched_frame = -1;
    int last_matched_index = -1;
    std::vector<std::pair<int, BoundingBox>> boxes;
};

}  // namespace

CameraTrackSet track_sort(const std::vector<FrameDetections>& frames, const RunConfig& config,
                          const DisplacementField* compensation, const CameraId& camera) {
    check_frames_ascending(frames);
    config.validate();

    CameraTrackSet out{camera, {}};
    if (frames.empty()) {
        return out;
    }

    std::vector<SortTrack> live;
    std::map<int, Track> finished;
    int next_id = 1;

    auto retire = [&](SortTrack& t) {
        if (!t.boxes.empty()) {
            finished.emplace(t.id, Track{t.id, camera, std::move(t.boxes)});
        }
    };

    std::size_t cursor = 0;
    const int first = frames.front().frame;
    const int last = frames.back().frame;
    static const std::vector<Detection> kNoDetections;

    // Frames absent from the input carry zero detections; tracks still age
    // through them.
    for (int frame = first; frame <= last; ++frame) {
        const std::vector<Detection>* dets = &kNoDetections;
        if (cursor < frames.size() && frames[cursor].frame == frame) {
            dets = &frames[cursor].detections;
            ++cursor;
        }

        for (auto& t : live) {
            t.state = kalman_predict(t.state);
            if (t.time_since_update > 0) {
                t.hit_streak = 0;
            }
            ++t.time_since_update;
        }

        const int n_tracks = static_cast<int>(live.size());
        const int n_dets = static_cast<int>(dets->size());
        std::vector<int> track_match(n_tracks, -1);
        if (n_tracks > 0 && n_dets > 0) {
            std::vector<double> overlap(static_cast<std::size_t>(n_tracks) * n_dets);
            for (int r = 0; r < n_tracks; ++r) {
                BoundingBox predicted = state_box(live[r].state);
                if (compensation != nullptr && live[r].last_matched_frame == frame - 1 &&
                    live[r].last_matched_index >= 0) {
                    const auto [dx, dy] =
                        compensation->shift(frame - 1, live[r].last_matched_index);
                    predicted = translated(predicted, dx, dy);
                }
                for (int c = 0; c < n_dets; ++c) {
                    overlap[r * n_dets + c] = iou(predicted, (*dets)[c].bbox);
                }
            }
            track_match =
                associate_max_iou(overlap, n_tracks, n_dets, config.iou_match_threshold);
        }

        std::vector<char> det_used(n_dets, 0);
        for (int r = 0; r < n_tracks; ++r) {
            const int c = track_match[r];
            if (c < 0) {
                continue;
            }
            det_used[c] = 1;
            SortTrack& t = live[r];
            t.state = kalman_update(t.state, (*dets)[c].bbox);
            t.time_since_update = 0;
            ++t.hit_streak;
            t.last_matched_frame = frame;
            t.last_matched_index = c;
            if (t.hit_streak >= config.sort_min_hits) {
                t.boxes.emplace_back(frame, (*dets)[c].bbox);
            }
        }

        for (int c = 0; c < n_dets; ++c) {
            if (det_used[c]) {
                continue;
            }
            SortTrack t;
            t.id = next_id++;
            t.state = kalman_init((*dets)[c].bbox);
            t.hit_streak = 1;
            t.last_matched_frame = frame;
            t.last_matched_index = c;
            if (t.hit_streak >= config.sort_min_hits) {
                t.boxes.emplace_back(frame, (*dets)[c].bbox);
            }
            live.push_back(std::move(t));
        }

        std::erase_if(live, [&](SortTrack& t) {
            if (t.time_since_update > config.sort_max_age) {
                retire(t);
                return true;
            }
            return false;
        });
    }

    for (auto& t : live) {
        retire(t);
    }

    out.tracks.reserve(finished.size());
    for (auto& [id, track] : finished) {
        out.tracks.push_back(std::move(track));
    }
    return out;
}

}  // namespace mcvt
