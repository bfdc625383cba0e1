#pragma once

#include <optional>
#include <vector>

#include "stg/caps.hpp"
#include "stg/exact.hpp"
#include "stg/graph.hpp"
#include "stg/supertoken.hpp"

namespace stg {

using LandmarkSet = std::vector<int>;          // distinct vertex ids, ascending
using PositionVector = std::vector<long long>; // distances to each landmark

// Position of every vertex relative to the landmark set (rows follow vertex
// ids 1..n, columns follow the landmark order).
std::vector<PositionVector> position_vectors(const Graph& g, const LandmarkSet& c);

// A landmark set resolves the graph when all positions are distinct.
bool is_resolving(const Graph& g, const LandmarkSet& c);

struct MetricDimensionResult {
    bool exact = false;   // false: no resolving set of size <= searched bound
    int dimension = 0;    // the metric dimension when exact, else the bound
    LandmarkSet witness;  // lexicographically first minimum resolving set
};

// Exhaustive search in increasing size, lexicographic order within each size.
// max_size < 0 searches up to n - 1 (always sufficient). Graphs larger than
// vertex_cap are refused with SizeCapError.
MetricDimensionResult metric_dimension(const Graph& g, int max_size = -1,
                                       int vertex_cap = kDefaultDimSearchCap);

// The n configs that put all k tokens on a single vertex, in vertex order.
std::vector<TokenConfig> canonical_landmarks(int n, int k);

// Position of config x relative to the canonical landmarks, computed as the
// vector-matrix product x * D over the base distance matrix. Coincides with
// genuine supertoken distances to the canonical landmark configs.
PositionVector position_via_matrix(const TokenConfig& x, const DistanceMatrix& d);

struct FeasibilityResult {
    bool feasible = false;
    std::optional<TokenConfig> config; // set when feasible
    std::vector<BigRat> solution;      // rho * D^{-1}, always set
};

// Is rho the canonical position vector of some config of k tokens on g?
// Inverts the base distance matrix exactly; throws SingularMatrixError when
// it is singular.
FeasibilityResult feasibility(const std::vector<long long>& rho, const Graph& g, int k);

// Exact inverse of the distance matrix of K_n:
// 1/(n-1) * circulant(2 - n, 1, ..., 1).
RatMatrix inverse_complete_distance(int n);

struct DimBoundReport {
    bool distance_matrix_singular = false;
    bool canonical_resolves = false;
    // Groups of configs sharing a canonical position (only when not resolving).
    std::vector<std::vector<TokenConfig>> collisions;
    bool degree_regular = false;
    // Meaningful only when degree_regular:
    bool reduced_resolves = false;       // dropping the last landmark still resolves
    bool position_sums_constant = false; // every position sums to row_sum * k
    long long expected_position_sum = 0;
};

// Exercise the canonical-landmark machinery on an entire supertoken graph.
DimBoundReport verify_supertoken_dim_bound(const Graph& g, int k,
                                           long long max_vertices = kDefaultVertexCap);

// Does k^(n-2) + n - 2 < binomial(n+k-1, k) hold? (Comparing the best case
// of the order/diameter lower bound against the supertoken order.)
bool check_inequality_kn(int n, int k);

} // namespace stg
