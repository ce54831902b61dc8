// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <mcvt/embedding.hpp>
#include <mcvt/geometry.hpp>
#include <mcvt/reid.hpp>
#include <mcvt/tracking.hpp>

namespace mcvt {

class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One row of the 10-field detection/track format:
/// frame,id,left,top,width,height,confidence,world_x,world_y,world_z.
/// Frames are 1-based as in the files; id is -1 for unassigned detections.
struct DetectionFileRow {
    int frame = 0;
    int id = -1;
    double left = 0.0;
    double top = 0.0;
    double width = 0.0;
    double height = 0.0;
    double confidence = 1.0;
    double world_x = -1.0;
    double world_y = -1.0;
    double world_z = -1.0;

    bool operator==(const DetectionFileRow&) const = default;
};

/// Parses the 10-field CSV rows in file order. Wrong field counts,
/// non-numeric fields, frames < 1 and non-positive box sizes raise a
/// ParseError naming the line. Confidence -1 (ground-truth rows) maps
/// to 1.0.
std::vector<DetectionFileRow> parse_detection_rows(std::istream& in,
                                                   const std::string& source_name);
std::vector<DetectionFileRow> read_detection_file(const std::string& path);

std::vector<Detection> to_detections(const std::vector<DetectionFileRow>& rows);

/// Groups rows by id into tracks (ids must all be >= 1; frames unique per
/// id). Tracks come out ordered by id.
CameraTrackSet to_track_set(const std::vector<DetectionFileRow>& rows, const CameraId& camera);

CameraTrackSet read_track_file(const std::string& path, const CameraId& camera);

/// Rows sorted by (frame, id), confidence written as 1. Numbers are
/// shortest round-trip decimal, so parse(write(x)) == x.
void write_tracks(const CameraTrackSet& tracks, const std::string& path);
void write_tracks(const CameraTrackSet& tracks, std::ostream& out);

/// Embedding CSV with header "camera,track,frame,e0,...,e{D-1}"; the
/// dimension is inferred from the header. Inconsistent row widths and
/// duplicate keys are errors.
EmbeddingTable parse_embeddings(std::istream& in, const std::string& source_name);
EmbeddingTable read_embedding_file(const std::string& path);
void write_embeddings(const EmbeddingTable& table, const std::string& path);
void write_embeddings(const EmbeddingTable& table, std::ostream& out);

/// Displacement CSV "frame,det_index,dx,dy", header required.
DisplacementField read_displacement_file(const std::string& path);
void write_displacements(const DisplacementField& field, const std::string& path);

/// Id mapping CSV "camera,local_id,global_id", header required.
IdMapping read_id_mapping(const std::string& path);
void write_id_mapping(const IdMapping& mapping, const std::string& path);
void write_id_mapping(const IdMapping& mapping, std::ostream& out);

/// Shortest decimal form of x that parses back to exactly x.
std::string format_number(double x);

}  // namespace mcvt
