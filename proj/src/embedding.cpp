// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/embedding.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mcvt {

EmbeddingTable::EmbeddingTable(int dimension) : dimension_(dimension) {
    if (dimension < 1) {
        throw std::invalid_argument("embedding dimension must be >= 1");
    }
}

void EmbeddingTable::insert(EmbeddingKey key, std::vector<double> vec) {
    if (vec.size() != static_cast<std::size_t>(dimension_)) {
        throw std::invalid_argument(
            "embedding for (" + key.camera + ", " + std::to_string(key.track_id) + ", " +
            std::to_string(key.frame) + ") has dimension " + std::to_string(vec.size()) +
            ", expected " + std::to_string(dimension_));
    }
    for (const double x : vec) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(
                "non-finite embedding component for (" + key.camera + ", " +
                std::to_string(key.track_id) + ", " + std::to_string(key.frame) + ")");
        }
    }
    const auto [it, inserted] = entries_.emplace(std::move(key), std::move(vec));
    if (!inserted) {
        throw std::invalid_argument(
            "duplicate embedding key (" + it->first.camera + ", " +
            std::to_string(it->first.track_id) + ", " + std::to_string(it->first.frame) + ")");
    }
}

const std::vector<double>* EmbeddingTable::find(const EmbeddingKey& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, const std::vector<double>*>> EmbeddingTable::track_embeddings(
    const CameraId& camera, int track_id) const {
    std::vector<std::pair<int, const std::vector<double>*>> out;
    const EmbeddingKey lo{camera, track_id, std::numeric_limits<int>::min()};
    const EmbeddingKey hi{camera, track_id, std::numeric_limits<int>::max()};
    for (auto it = entries_.lower_bound(lo); it != entries_.end() && !(hi < it->first); ++it) {
        out.emplace_back(it->first.frame, &it->second);
    }
    return out;
}

}  // namespace mcvt
