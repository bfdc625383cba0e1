#include "stg/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stg {
namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Kuhn's augmenting-path matching, used to check that the rows in
// [first_row, n) can still be perfectly matched into the unused columns.
struct TightMatcher {
    const std::vector<std::vector<int>>& tight; // candidate columns per row
    std::vector<int> col_to_row;
    std::vector<bool> visited;

    bool augment(int row) {
        for (int j : tight[row]) {
            if (col_to_row[j] == -2 || visited[j])
                continue; // -2 marks columns already consumed by fixed rows
            visited[j] = true;
            if (col_to_row[j] == -1 || augment(col_to_row[j])) {
                col_to_row[j] = row;
                return true;
            }
        }
        return false;
    }
};

bool can_complete(const std::vector<std::vector<int>>& tight, int n, int first_row,
                  const std::vector<bool>& col_used) {
    TightMatcher m{tight, std::vector<int>(n, -1), std::vector<bool>(n, false)};
    for (int j = 0; j < n; ++j)
        if (col_used[j])
            m.col_to_row[j] = -2;
    for (int i = first_row; i < n; ++i) {
        std::fill(m.visited.begin(), m.visited.end(), false);
        if (!m.augment(i))
            return false;
    }
    return true;
}

} // namespace

CostMatrix::CostMatrix(std::vector<std::vector<long long>> rows)
    : n_(static_cast<int>(rows.size())), rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("cost matrix must be square");
        for (long long c : row)
            if (c < 0)
                throw std::invalid_argument("cost matrix entries must be non-negative");
    }
}

Assignment solve_assignment(const CostMatrix& costs) {
    const int n = costs.size();
    if (n == 0)
        return {};

    // Shortest augmenting paths with potentials (row/column duals u, v).
    // 1-based with a sentinel column 0; p[j] is the row matched to column j.
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const int i0 = p[j0];
            int j1 = 0;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const long long cur = costs.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
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

    // (u, v) is now an optimal dual: complementary slackness says an
    // assignment is optimal exactly when it only uses tight edges, i.e.
    // cost[i][j] == u[i+1] + v[j+1]. Pick the lexicographically smallest
    // perfect matching of the tight subgraph, greedily per row.
    std::vector<std::vector<int>> tight(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (costs.at(i, j) == u[i + 1] + v[j + 1])
                tight[i].push_back(j);

    Assignment result;
    result.row_to_col.assign(n, -1);
    std::vector<bool> col_used(n, false);
    for (int i = 0; i < n; ++i) {
        for (int j : tight[i]) {
            if (col_used[j])
                continue;
            col_used[j] = true;
            if (can_complete(tight, n, i + 1, col_used)) {
                result.row_to_col[i] = j;
                break;
            }
            col_used[j] = false;
        }
        if (result.row_to_col[i] < 0)
            throw std::logic_error("tight subgraph lost its perfect matching");
    }
    for (int i = 0; i < n; ++i)
        result.total_weight += costs.at(i, result.row_to_col[i]);
    return result;
}

Assignment brute_force_assignment(const CostMatrix& costs) {
    const int n = costs.size();
    if (n > 9)
        throw std::invalid_argument("brute force assignment limited to size 9");
    if (n == 0)
        return {};

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Assignment best;
    best.total_weight = kInf;
    do {
        long long w = 0;
        for (int i = 0; i < n; ++i)
            w += costs.at(i, perm[i]);
        if (w < best.total_weight) {
            best.total_weight = w;
            best.row_to_col = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace stg
