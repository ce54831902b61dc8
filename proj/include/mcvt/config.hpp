// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <iosfwd>
#include <string>

namespace mcvt {

/// Pipeline parameters. Defaults follow the reference configuration:
/// re-id threshold 0.6 with P = 4 and N = 3, parked-car dispersion cut
/// at 50 px^2 and an 80x60 px minimum box size.
struct RunConfig {
    double iou_match_threshold = 0.2;
    int sort_max_age = 1;
    int sort_min_hits = 1;
    double parked_dispersion_threshold = 50.0;
    double min_box_width = 80.0;
    double min_box_height = 60.0;
    double reid_match_threshold = 0.6;
    int reid_p = 4;
    int reid_n = 3;
    double eval_iou_threshold = 0.5;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Parses "key = value" lines; '#' starts a comment. Keys are the RunConfig
/// field names (reid_P, reid_N for the sample counts); unknown keys are an
/// error so typos in experiment scripts fail loudly.
RunConfig parse_config(std::istream& in, const std::string& source_name);

RunConfig load_config(const std::string& path);

}  // namespace mcvt
