#include <random>
#include <stdexcept>

#include "doctest.h"
#include "stg/assignment.hpp"

using namespace stg;

TEST_CASE("cost matrix validation") {
    CHECK_THROWS_AS(CostMatrix({{1, 2}}), std::invalid_argument);       // not square
    CHECK_THROWS_AS(CostMatrix({{1, -2}, {3, 4}}), std::invalid_argument); // negative
    CostMatrix ok({{1, 2}, {3, 4}});
    CHECK(ok.size() == 2);
    CHECK(ok.at(1, 0) == 3);
}

TEST_CASE("hand-sized instances") {
    Assignment a = solve_assignment(CostMatrix({{0, 5, 5}, {5, 0, 5}, {5, 5, 0}}));
    CHECK(a.total_weight == 0);
    CHECK(a.row_to_col == std::vector<int>{0, 1, 2});

    // unique optimum off the diagonal
    a = solve_assignment(CostMatrix({{4, 1}, {2, 9}}));
    CHECK(a.total_weight == 3);
    CHECK(a.row_to_col == std::vector<int>{1, 0});

    a = solve_assignment(CostMatrix(std::vector<std::vector<long long>>{{7}}));
    CHECK(a.total_weight == 7);
    CHECK(a.row_to_col == std::vector<int>{0});
}

TEST_CASE("ties break to the lexicographically smallest assignment") {
    // all-equal costs: every permutation is optimal, identity is lex-first
    Assignment flat = solve_assignment(
        CostMatrix({{3, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}}));
    CHECK(flat.row_to_col == std::vector<int>{0, 1, 2, 3});

    // two optimal permutations, identity and the swap; lex-first wins
    Assignment tie = solve_assignment(CostMatrix({{1, 2}, {2, 1}}));
    CHECK(tie.total_weight == 2);
    CHECK(tie.row_to_col == std::vector<int>{0, 1});

    // forcing the first row away from its cheapest column
    Assignment forced = solve_assignment(CostMatrix({{1, 1, 4}, {1, 9, 9}, {4, 9, 1}}));
    CHECK(forced.total_weight == 3);
    CHECK(forced.row_to_col == std::vector<int>{1, 0, 2});
}

TEST_CASE("matches exhaustive search on random instances") {
    std::mt19937 rng(20240816);
    std::uniform_int_distribution<long long> entry(0, 12);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + trial % 7;
        std::vector<std::vector<long long>> rows(
            static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n)));
        for (auto& row : rows)
            for (auto& x : row)
                x = entry(rng);
        CostMatrix m(std::move(rows));
        Assignment fast = solve_assignment(m);
        Assignment brute = brute_force_assignment(m);
        REQUIRE(fast.total_weight == brute.total_weight);
        REQUIRE(fast.row_to_col == brute.row_to_col);
    }
}

TEST_CASE("exhaustive search refuses oversized instances") {
    std::vector<std::vector<long long>> rows(10, std::vector<long long>(10, 1));
    CHECK_THROWS_AS(brute_force_assignment(CostMatrix(std::move(rows))),
                    std::invalid_argument);
}
