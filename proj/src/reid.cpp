// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/reid.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mcvt {

int IdMapping::global_id(const CameraId& camera, int local_id) const {
    const auto it = entries.find({camera, local_id});
    if (it == entries.end()) {
        throw std::out_of_range("no global id for (" + camera + ", " +
                                std::to_string(local_id) + ")");
    }
    return it->second;
}

double cosine_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cosine_distance: dimension mismatch");
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) {
        throw std::invalid_argument("degenerate embedding: zero vector");
    }
    return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<int> sample_indices(int available, int requested) {
    if (available < 1 || requested < 1) {
        throw std::invalid_argument("sample_indices: arguments must be >= 1");
    }
    std::vector<int> out;
    if (available <= requested) {
        out.resize(available);
        for (int i = 0; i < available; ++i) {
            out[i] = i;
        }
        return out;
    }
    out.resize(requested);
    for (int i = 0; i < requested; ++i) {
        out[i] = static_cast<int>(static_cast<long long>(i) * available / requested);
    }
    return out;
}

MatchScore match_count(const CarSampleSet& query, const CarSampleSet& reference,
                       double threshold) {
    MatchScore score;
    double total = 0.0;
    long long pairs = 0;
    for (const auto& q : query.embeddings) {
        for (const auto& r : reference.embeddings) {
            const double d = cosine_distance(q, r);
            if (d < threshold) {
                ++score.matches;
            }
            total += d;
            ++pairs;
        }
    }
    score.mean_distance = pairs > 0 ? total / static_cast<double>(pairs) : 0.0;
    return score;
}

CarSampleSet sample_track_embeddings(const Track& track, const CameraId& camera,
                                     const EmbeddingTable& table, int count) {
    // Restrict the table's entries to the track's own frames: boxes dropped
    // by post-processing are not evidence.
    const auto available = table.track_embeddings(camera, track.id);
    std::vector<const std::vector<double>*> usable;
    auto box_it = track.boxes.begin();
    for (const auto& [frame, vec] : available) {
        while (box_it != track.boxes.end() && box_it->first < frame) {
            ++box_it;
        }
        if (box_it != track.boxes.end() && box_it->first == frame) {
            usable.push_back(vec);
        }
    }
    if (usable.empty()) {
        throw std::runtime_error("no embeddings for track (" + camera + ", " +
                                 std::to_string(track.id) + ")");
    }

    CarSampleSet set{camera, track.id, {}};
    for (const int idx : sample_indices(static_cast<int>(usable.size()), count)) {
        set.embeddings.push_back(*usable[idx]);
    }
    return set;
}

namespace detail {

IdMapping reid_assign(const CameraTrackSet& query, const ReferencePool& reference,
                      const EmbeddingTable& table, const RunConfig& config,
                      int& next_global_id) {
    std::vector<const Track*> ordered;
    ordered.reserve(query.tracks.size());
    for (const auto& t : query.tracks) {
        ordered.push_back(&t);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const Track* a, const Track* b) { return a->id < b->id; });

    IdMapping mapping;
    for (const Track* track : ordered) {
        const CarSampleSet samples =
            sample_track_embeddings(*track, query.camera, table, config.reid_p);

        const ReferenceCar* best = nullptr;
        MatchScore best_score;
        for (const auto& car : reference) {
            const MatchScore score = match_count(samples, car.samples,
                                                 config.reid_match_threshold);
            if (score.matches == 0) {
                continue;
            }
            const bool better =
                best == nullptr || score.matches > best_score.matches ||
                (score.matches == best_score.matches &&
                 (score.mean_distance < best_score.mean_distance ||
                  (score.mean_distance == best_score.mean_distance &&
                   car.global_id < best->global_id)));
            if (better) {
                best = &car;
                best_score = score;
            }
        }

        if (best != nullptr) {
            mapping.set(query.camera, track->id, best->global_id);
        } else {
            mapping.set(query.camera, track->id, next_global_id);
            ++next_global_id;
        }
    }
    return mapping;
}

}  // namespace detail

IdMapping reid_pair(const CameraTrackSet& query, const ReferencePool& reference,
                    const EmbeddingTable& table, const RunConfig& config) {
    int next_global_id = 1;
    for (const auto& car : reference) {
        next_global_id = std::max(next_global_id, car.global_id + 1);
    }
    return detail::reid_assign(query, reference, table, config, next_global_id);
}

IdMapping reid_cascade(const std::vector<CameraTrackSet>& cameras, const EmbeddingTable& table,
                       const RunConfig& config) {
    if (cameras.empty()) {
        throw std::invalid_argument("reid_cascade: at least one camera required");
    }
    config.validate();

    std::vector<const CameraTrackSet*> ordered;
    ordered.reserve(cameras.size());
    for (const auto& cam : cameras) {
        ordered.push_back(&cam);
    }
    std::sort(ordered.begin(), ordered.end(), [](const CameraTrackSet* a,
                                                 const CameraTrackSet* b) {
        return a->camera < b->camera;
    });
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        if (ordered[i]->camera == ordered[i - 1]->camera) {
            throw std::invalid_argument("reid_cascade: duplicate camera id '" +
                                        ordered[i]->camera + "'");
        }
    }

    IdMapping mapping;
    ReferencePool pool;
    int next_global_id = 1;

    auto merge_camera = [&](const CameraTrackSet& cam, bool is_reference) {
        std::vector<const Track*> tracks;
        tracks.reserve(cam.tracks.size());
        for (const auto& t : cam.tracks) {
            tracks.push_back(&t);
        }
        std::sort(tracks.begin(), tracks.end(),
                  [](const Track* a, const Track* b) { return a->id < b->id; });
        for (const Track* t : tracks) {
            int gid = 0;
            if (is_reference) {
                gid = t->id;
                mapping.set(cam.camera, t->id, gid);
            } else {
                gid = mapping.global_id(cam.camera, t->id);
            }
            pool.push_back(
                {gid, sample_track_embeddings(*t, cam.camera, table, config.reid_n)});
            next_global_id = std::max(next_global_id, gid + 1);
        }
    };

    merge_camera(*ordered.front(), true);
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const IdMapping step =
            detail::reid_assign(*ordered[i], pool, table, config, next_global_id);
        mapping.entries.insert(step.entries.begin(), step.entries.end());
        merge_camera(*ordered[i], false);
    }
    return mapping;
}

}  // namespace mcvt
