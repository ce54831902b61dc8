// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/config.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace mcvt {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view value, const std::string& where) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument(where + ": not a number: '" + std::string(value) + "'");
    }
    return out;
}

int parse_int(std::string_view value, const std::string& where) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument(where + ": not an integer: '" + std::string(value) + "'");
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (!(iou_match_threshold >= 0.0 && iou_match_threshold <= 1.0)) {
        throw std::invalid_argument("iou_match_threshold must be in [0, 1]");
    }
    if (sort_max_age < 0) {
        throw std::invalid_argument("sort_max_age must be >= 0");
    }
    if (sort_min_hits < 1) {
        throw std::invalid_argument("sort_min_hits must be >= 1");
    }
    if (!(parked_dispersion_threshold >= 0.0)) {
        throw std::invalid_argument("parked_dispersion_threshold must be >= 0");
    }
    if (!(min_box_width > 0.0) || !(min_box_height > 0.0)) {
        throw std::invalid_argument("minimum box size must be positive");
    }
    if (!(reid_match_threshold >= 0.0 && reid_match_threshold <= 2.0)) {
        throw std::invalid_argument("reid_match_threshold must be in [0, 2]");
    }
    if (reid_p < 1 || reid_n < 1) {
        throw std::invalid_argument("reid_P and reid_N must be >= 1");
    }
    if (!(eval_iou_threshold > 0.0 && eval_iou_threshold <= 1.0)) {
        throw std::invalid_argument("eval_iou_threshold must be in (0, 1]");
    }
}

RunConfig parse_config(std::istream& in, const std::string& source_name) {
    RunConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body{line};
        if (const auto hash = body.find('#'); hash != std::string_view::npos) {
            body = body.substr(0, hash);
        }
        body = trim(body);
        if (body.empty()) {
            continue;
        }
        const std::string where = source_name + ":" + std::to_string(line_no);
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument(where + ": expected 'key = value'");
        }
        const auto key = trim(body.substr(0, eq));
        const auto value = trim(body.substr(eq + 1));

        if (key == "iou_match_threshold") {
            cfg.iou_match_threshold = parse_real(value, where);
        } else if (key == "sort_max_age") {
            cfg.sort_max_age = parse_int(value, where);
        } else if (key == "sort_min_hits") {
            cfg.sort_min_hits = parse_int(value, where);
        } else if (key == "parked_dispersion_threshold") {
            cfg.parked_dispersion_threshold = parse_real(value, where);
        } else if (key == "min_box_width") {
            cfg.min_box_width = parse_real(value, where);
        } else if (key == "min_box_height") {
            cfg.min_box_height = parse_real(value, where);
        } else if (key == "reid_match_threshold") {
            cfg.reid_match_threshold = parse_real(value, where);
        } else if (key == "reid_P") {
            cfg.reid_p = parse_int(value, where);
        } else if (key == "reid_N") {
            cfg.reid_n = parse_int(value, where);
        } else if (key == "eval_iou_threshold") {
            cfg.eval_iou_threshold = parse_real(value, where);
        } else {
            throw std::invalid_argument(where + ": unknown key '" + std::string(key) + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path);
    }
    return parse_config(in, path);
}

}  // namespace mcvt
