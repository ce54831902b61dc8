// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#pragma once

#include <vector>

namespace mcvt {

/// Minimum-cost one-to-one assignment (Hungarian algorithm with potentials,
/// O(n^2 m)).
///
/// `cost` is row-major with n_rows x n_cols finite entries. Every index of
/// the smaller side is assigned. Returns one column per row, or -1 for rows
/// left unassigned (possible only when n_rows > n_cols).
std::vector<int> solve_assignment(const std::vector<double>& cost, int n_rows, int n_cols);

}  // namespace mcvt
