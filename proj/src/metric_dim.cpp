#include "stg/metric_dim.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "stg/errors.hpp"

namespace stg {
namespace {

void check_landmarks(const Graph& g, const LandmarkSet& c) {
    if (c.empty())
        throw std::invalid_argument("landmark set must be non-empty");
    LandmarkSet sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("landmarks must be distinct");
    if (sorted.front() < 1 || sorted.back() > g.order())
        throw std::invalid_argument("landmark out of range");
}

} // namespace

std::vector<PositionVector> position_vectors(const Graph& g, const LandmarkSet& c) {
    check_landmarks(g, c);
    const int n = g.order();
    std::vector<PositionVector> pos(n, PositionVector(c.size()));
    for (size_t col = 0; col < c.size(); ++col) {
        const auto dist = bfs_distances(g, c[col]);
        for (int v = 1; v <= n; ++v)
            pos[v - 1][col] = dist[v];
    }
    return pos;
}

bool is_resolving(const Graph& g, const LandmarkSet& c) {
    auto pos = position_vectors(g, c);
    std::sort(pos.begin(), pos.end());
    return std::adjacent_find(pos.begin(), pos.end()) == pos.end();
}

MetricDimensionResult metric_dimension(const Graph& g, int max_size, int vertex_cap) {
    const int n = g.order();
    if (n > vertex_cap)
        throw SizeCapError("exhaustive search on " + std::to_string(n) +
                           " vertices, above the cap of " + std::to_string(vertex_cap));
    if (max_size < 0)
        max_size = n - 1; // some set of n-1 vertices always resolves
    if (n == 1)
        return {true, 1, {1}};

    // For each vertex z, a bitmask over vertex pairs telling which pairs z
    // separates; a set resolves iff its masks OR to all-ones.
    const int pairs = n * (n - 1) / 2;
    const int words = (pairs + 63) / 64;
    std::vector<std::vector<uint64_t>> sep(n + 1, std::vector<uint64_t>(words, 0));
    {
        std::vector<std::vector<int>> dist(n + 1);
        for (int z = 1; z <= n; ++z)
            dist[z] = bfs_distances(g, z);
        int bit = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v, ++bit)
                for (int z = 1; z <= n; ++z)
                    if (dist[z][u] != dist[z][v])
                        sep[z][bit / 64] |= uint64_t(1) << (bit % 64);
    }
    std::vector<uint64_t> full(words, ~uint64_t(0));
    if (pairs % 64)
        full[words - 1] = (uint64_t(1) << (pairs % 64)) - 1;

    for (int size = 1; size <= std::min(max_size, n); ++size) {
        // lexicographic enumeration of all `size`-subsets of 1..n
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i)
            pick[i] = i + 1;
        while (true) {
            std::vector<uint64_t> acc(words, 0);
            for (int z : pick)
                for (int w = 0; w < words; ++w)
                    acc[w] |= sep[z][w];
            if (acc == full)
                return {true, size, pick};
            int i = size - 1;
            while (i >= 0 && pick[i] == n - (size - 1 - i))
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return {false, max_size, {}};
}

std::vector<TokenConfig> canonical_landmarks(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("canonical_landmarks needs n >= 1, k >= 0");
    std::vector<TokenConfig> out;
    out.reserve(n);
    for (int v = 1; v <= n; ++v)
        out.push_back(TokenConfig::all_on(n, k, v));
    return out;
}

PositionVector position_via_matrix(const TokenConfig& x, const DistanceMatrix& d) {
    const int n = d.order();
    if (x.vertex_count() != n)
        throw std::invalid_argument("config does not match the matrix order");
    PositionVector pos(n, 0);
    for (int j = 1; j <= n; ++j) {
        long long sum = 0;
        for (int i = 1; i <= n; ++i)
            sum += static_cast<long long>(x.at(i)) * d.at(i, j);
        pos[j - 1] = sum;
    }
    return pos;
}

FeasibilityResult feasibility(const std::vector<long long>& rho, const Graph& g, int k) {
    const int n = g.order();
    if (static_cast<int>(rho.size()) != n)
        throw std::invalid_argument("position vector does not match the graph order");
    if (k < 0)
        throw std::invalid_argument("token count must be non-negative");

    const auto inv = invert_exact(to_rational(distance_matrix(g)));
    FeasibilityResult result;
    result.solution.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        BigRat sum = 0;
        for (int i = 0; i < n; ++i)
            sum += to_bigrat(rho[i]) * inv[i][j];
        result.solution[j] = sum;
    }

    BigRat total = 0;
    bool integral = true;
    for (const auto& q : result.solution) {
        total += q;
        if (q < 0 || q.get_den() != 1)
            integral = false;
    }
    if (integral && total == k) {
        std::vector<int> counts(n);
        for (int j = 0; j < n; ++j)
            counts[j] = static_cast<int>(result.solution[j].get_num().get_si());
        result.feasible = true;
        result.config = TokenConfig(std::move(counts));
    }
    return result;
}

RatMatrix inverse_complete_distance(int n) {
    if (n < 2)
        throw std::invalid_argument("inverse_complete_distance needs n >= 2");
    RatMatrix inv(n, std::vector<BigRat>(n));
    const BigRat diag(2 - n, n - 1);
    const BigRat off(1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[i][j] = (i == j) ? diag : off;
    return inv;
}

DimBoundReport verify_supertoken_dim_bound(const Graph& g, int k, long long max_vertices) {
    const int n = g.order();
    const BigInt order = supertoken_order(n, k);
    if (order > to_bigint(max_vertices))
        throw SizeCapError("supertoken graph would have " + order.get_str() +
                           " vertices, above the cap of " + std::to_string(max_vertices));

    const auto d = distance_matrix(g);
    DimBoundReport report;
    report.distance_matrix_singular = (determinant(d) == 0);

    const auto configs = enumerate_configs(n, k);
    std::map<PositionVector, std::vector<TokenConfig>> by_position;
    for (const auto& x : configs)
        by_position[position_via_matrix(x, d)].push_back(x);
    for (const auto& [pos, group] : by_position)
        if (group.size() > 1)
            report.collisions.push_back(group);
    report.canonical_resolves = report.collisions.empty();

    const auto dds = distance_degree_sequence(g);
    report.degree_regular = dds.has_value();
    if (dds) {
        report.expected_position_sum = row_sum(*dds) * k;
        report.position_sums_constant = true;
        for (const auto& [pos, group] : by_position) {
            long long sum = 0;
            for (long long entry : pos)
                sum += entry;
            if (sum != report.expected_position_sum)
                report.position_sums_constant = false;
        }
        // With constant sums the last coordinate is redundant; check that
        // dropping it preserves distinctness.
        std::vector<PositionVector> reduced;
        reduced.reserve(configs.size());
        for (const auto& [pos, group] : by_position)
            for (size_t copy = 0; copy < group.size(); ++copy) {
                PositionVector r(pos.begin(), pos.end() - 1);
                reduced.push_back(std::move(r));
            }
        std::sort(reduced.begin(), reduced.end());
        report.reduced_resolves =
            std::adjacent_find(reduced.begin(), reduced.end()) == reduced.end();
    }
    return report;
}

bool check_inequality_kn(int n, int k) {
    if (n < 3 || k < 1)
        throw std::invalid_argument("check_inequality_kn needs n >= 3, k >= 1");
    BigInt lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(n - 2));
    lhs += n - 2;
    return lhs < supertoken_order(n, k);
}

} // namespace stg
