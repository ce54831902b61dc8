// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <compare>
#include <map>
#include <vector>

#include <mcvt/geometry.hpp>

namespace mcvt {

struct EmbeddingKey {
    CameraId camera;
    int track_id = 0;
    int frame = 0;

    auto operator<=>(const EmbeddingKey&) const = default;
};

/// Appearance vectors keyed by (camera, track, frame), all of one fixed
/// dimension. Vectors are stored exactly as ingested; any normalization
/// is the consumer's business.
class EmbeddingTable {
public:
    explicit EmbeddingTable(int dimension);

    int dimension() const { return dimension_; }
    std::size_t size() const { return entries_.size(); }

    /// Throws on dimension mismatch, non-finite components or duplicate key.
    void insert(EmbeddingKey key, std::vector<double> vec);

    /// Null when the key is absent.
    const std::vector<double>* find(const EmbeddingKey& key) const;

    /// All embeddings of one track, ordered by frame.
    std::vector<std::pair<int, const std::vector<double>*>> track_embeddings(
        const CameraId& camera, int track_id) const;

    const std::map<EmbeddingKey, std::vector<double>>& entries() const { return entries_; }

    bool operator==(const EmbeddingTable&) const = default;

private:
    int dimension_;
    std::map<EmbeddingKey, std::vector<double>> entries_;
};

}  // namespace mcvt
