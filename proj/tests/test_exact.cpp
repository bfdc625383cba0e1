#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stg/errors.hpp"
#include "stg/exact.hpp"
#include "stg/graph.hpp"

using namespace stg;

namespace {

// Independent oracle: cofactor expansion along the first row.
BigInt det_by_cofactors(const std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    BigInt sum = 0;
    for (size_t col = 0; col < n; ++col) {
        std::vector<std::vector<BigInt>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        BigInt term = m[0][col] * det_by_cofactors(minor);
        if (col % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(19, 10) == 92378);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    // Pascal identity on a sweep
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const size_t n = 1 + trial % 5;
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (auto& row : m)
            for (auto& x : row)
                x = entry(rng);
        CHECK(determinant(m) == det_by_cofactors(m));
    }
}

TEST_CASE("determinants of distance matrices") {
    CHECK(determinant(DistanceMatrix(Graph::path(3))) == 4);
    CHECK(determinant(DistanceMatrix(Graph::cycle(5))) == 6);
    CHECK(determinant(DistanceMatrix(Graph::cycle(6))) == 0);
    CHECK(determinant(DistanceMatrix(Graph::complete(4))) == -3);
}

TEST_CASE("tree determinant closed form") {
    CHECK(tree_det_formula(2) == -1);
    CHECK(tree_det_formula(3) == 4);   // (-1)^2 * 2 * 2^1
    CHECK(tree_det_formula(9) == 1024); // (-1)^8 * 8 * 2^7
    CHECK(tree_det_formula(4) == -12);
    // the value depends only on the order, not the tree shape
    Graph star(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CHECK(determinant(DistanceMatrix(star)) == tree_det_formula(5));
    CHECK(determinant(DistanceMatrix(Graph::path(5))) == tree_det_formula(5));
}

TEST_CASE("odd unicyclic determinant closed form") {
    // (-2)^m (k(k+1) + (2k+1)m/2)
    CHECK(unicyclic_odd_det_formula(1, 0) == BigRat(2));
    CHECK(unicyclic_odd_det_formula(2, 0) == BigRat(6));
    CHECK(unicyclic_odd_det_formula(1, 1) == BigRat(-7)); // -2 * (2 + 3/2)
    CHECK(unicyclic_odd_det_formula(1, 2) == BigRat(20));
    CHECK(unicyclic_odd_det_formula(2, 3) == BigRat(-108)); // -8 * (6 + 15/2)

    // triangle with one pendant, evaluated directly
    Graph g(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
    CHECK(to_rational(determinant(DistanceMatrix(g))) == unicyclic_odd_det_formula(1, 1));
}

TEST_CASE("exact inverse") {
    RatMatrix a = {{BigRat(2), BigRat(1)}, {BigRat(1), BigRat(1)}};
    RatMatrix inv = invert_exact(a);
    CHECK(inv[0][0] == BigRat(1));
    CHECK(inv[0][1] == BigRat(-1));
    CHECK(inv[1][0] == BigRat(-1));
    CHECK(inv[1][1] == BigRat(2));

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-6, 6);
    int checked = 0;
    while (checked < 50) {
        const size_t n = 1 + checked % 4;
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (auto& row : m)
            for (auto& x : row)
                x = entry(rng);
        if (determinant(m) == 0)
            continue;
        RatMatrix q(n, std::vector<BigRat>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                q[i][j] = to_rational(m[i][j]);
        RatMatrix inv2 = invert_exact(q);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                BigRat cell = 0;
                for (size_t t = 0; t < n; ++t)
                    cell += q[i][t] * inv2[t][j];
                CHECK(cell == (i == j ? BigRat(1) : BigRat(0)));
            }
        ++checked;
    }

    RatMatrix singular = {{BigRat(1), BigRat(2)}, {BigRat(2), BigRat(4)}};
    CHECK_THROWS_AS(invert_exact(singular), SingularMatrixError);
}

TEST_CASE("wide integer helpers") {
    CHECK(to_bigint(1352078LL) == BigInt(1352078));
    CHECK(to_bigrat(-5LL) == BigRat(-5));
}
