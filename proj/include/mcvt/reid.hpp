// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include <mcvt/config.hpp>
#include <mcvt/embedding.hpp>
#include <mcvt/geometry.hpp>

namespace mcvt {

/// Sampled appearance vectors of one car in one camera.
struct CarSampleSet {
    CameraId camera;
    int track_id = 0;
    std::vector<std::vector<double>> embeddings;
};

/// (camera, local track id) -> global id, total over all input tracks.
struct IdMapping {
    std::map<std::pair<CameraId, int>, int> entries;

    void set(const CameraId& camera, int local_id, int global_id) {
        entries[{camera, local_id}] = global_id;
    }

    /// Throws if the pair is unmapped.
    int global_id(const CameraId& camera, int local_id) const;

    bool operator==(const IdMapping&) const = default;
};

/// 1 - cos(a, b), in [0, 2]. Scale-invariant, so raw and normalized
/// embeddings give the same value. Throws on a zero vector.
double cosine_distance(std::span<const double> a, std::span<const double> b);

/// Indices of k frames spread uniformly over M available ones: all of
/// 0..M-1 when M <= k, else floor(i*M/k) for i = 0..k-1.
std::vector<int> sample_indices(int available, int requested);

struct MatchScore {
    int matches = 0;
    double mean_distance = 0.0;
};

/// All-vs-all comparison of the two sample sets: pairs with cosine
/// distance below the threshold count as matches; the mean is over every
/// pair. Throws on dimension mismatch.
MatchScore match_count(const CarSampleSet& query, const CarSampleSet& reference,
                       double threshold);

/// One already-merged car: its global id plus its sampled embeddings.
struct ReferenceCar {
    int global_id = 0;
    CarSampleSet samples;
};

using ReferencePool = std::vector<ReferenceCar>;

/// Samples `count` embeddings of a track, uniformly over the frames that
/// have an entry in the table. Throws when the track has none, naming
/// (camera, track).
CarSampleSet sample_track_embeddings(const Track& track, const CameraId& camera,
                                     const EmbeddingTable& table, int count);

/// Re-identifies one camera against a reference pool: each query car takes
/// the global id of the pool car with the most matches (ties: smaller mean
/// distance, then smaller global id); a car matching nothing keeps a fresh
/// id.
IdMapping reid_pair(const CameraTrackSet& query, const ReferencePool& reference,
                    const EmbeddingTable& table, const RunConfig& config);

/// Cascade over cameras in ascending id order: the first camera keeps its
/// ids; every re-identified car joins the pool with its N samples before
/// the next camera is processed.
IdMapping reid_cascade(const std::vector<CameraTrackSet>& cameras, const EmbeddingTable& table,
                       const RunConfig& config);

namespace detail {
// reid_pair with an explicit fresh-id counter, shared across cascade steps.
IdMapping reid_assign(const CameraTrackSet& query, const ReferencePool& reference,
                      const EmbeddingTable& table, const RunConfig& config, int& next_global_id);
}  // namespace detail

}  // namespace mcvt
