// SPDX-License-Identifier: MIT
// Copyright (c) 2026 mcvt contributors

#include <mcvt/assignment.hpp>

#include <limits>
#include <stdexcept>

namespace mcvt {

namespace {

// Potentials-based Hungarian for n <= m. Indexing is 1-based internally;
// p[j] holds the row matched to column j.
std::vector<int> solve_rows(const std::vector<double>& cost, int n, int m) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0);
    std::vector<double> v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0);
    std::vector<int> way(m + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) {
                    continue;
                }
                const double cur = cost[(i0 - 1) * m + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= m; ++j) {
        if (p[j] != 0) {
            row_to_col[p[j] - 1] = j - 1;
        }
    }
    return row_to_col;
}

}  // namespace

std::vector<int> solve_assignment(const std::vector<double>& cost, int n_rows, int n_cols) {
    if (n_rows < 0 || n_cols < 0 ||
        cost.size() != static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols)) {
        throw std::invalid_argument("assignment: cost matrix size mismatch");
    }
    if (n_rows == 0 || n_cols == 0) {
        return std::vector<int>(n_rows, -1);
    }
    if (n_rows <= n_cols) {
        return solve_rows(cost, n_rows, n_cols);
    }

    // Transpose so the assigned side is the smaller one.
    std::vector<double> t(cost.size());
    for (int r = 0; r < n_rows; ++r) {
        for (int c = 0; c < n_cols; ++c) {
            t[c * n_rows + r] = cost[r * n_cols + c];
        }
    }
    const std::vector<int> col_to_row = solve_rows(t, n_cols, n_rows);
    std::vector<int> row_to_col(n_rows, -1);
    for (int c = 0; c < n_cols; ++c) {
        if (col_to_row[c] >= 0) {
            row_to_col[col_to_row[c]] = c;
        }
    }
    return row_to_col;
}

}  // namespace mcvt
