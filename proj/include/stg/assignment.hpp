#pragma once

#include <vector>

namespace stg {

// Square matrix of non-negative costs, 0-based accessors.
class CostMatrix {
public:
    explicit CostMatrix(std::vector<std::vector<long long>> rows);

    int size() const { return n_; }
    long long at(int r, int c) const { return rows_[r][c]; }

private:
    int n_;
    std::vector<std::vector<long long>> rows_;
};

struct Assignment {
    std::vector<int> row_to_col; // permutation, 0-based
    long long total_weight = 0;
};

// Minimum-weight perfect matching on a complete bipartite graph (the linear
// assignment problem). Among all optimal assignments, returns the one whose
// row_to_col is lexicographically smallest.
Assignment solve_assignment(const CostMatrix& costs);

// Exhaustive reference solver with the same tie-break; sizes up to ~9.
Assignment brute_force_assignment(const CostMatrix& costs);

} // namespace stg
