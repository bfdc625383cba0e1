#pragma once

#include <string>
#include <vector>

#include "stg/caps.hpp"
#include "stg/exact.hpp"
#include "stg/graph.hpp"

namespace stg {

// Placement of k indistinguishable tokens on the vertices of an n-vertex
// graph: a vector of n non-negative counts summing to k.
class TokenConfig {
public:
    explicit TokenConfig(std::vector<int> counts);

    const std::vector<int>& counts() const { return counts_; }
    int vertex_count() const { return static_cast<int>(counts_.size()); }
    int token_total() const { return total_; }
    int at(int vertex) const { return counts_[vertex - 1]; } // 1-based

    // k tokens all on one vertex.
    static TokenConfig all_on(int n, int k, int vertex);

    // "310212" (single digits, k <= 9) or "3,1,0,2,1,2".
    std::string label() const;
    static TokenConfig parse(const std::string& text);

    bool operator==(const TokenConfig&) const = default;
    bool operator<(const TokenConfig& other) const { return counts_ < other.counts_; }

private:
    std::vector<int> counts_;
    int total_;
};

// Number of configs: binomial(n + k - 1, k).
BigInt supertoken_order(int n, int k);

// All configs of k tokens on n vertices in descending lexicographic order,
// i.e. (k,0,...,0) first and (0,...,0,k) last.
std::vector<TokenConfig> enumerate_configs(int n, int k);

// 1-based position of c in enumerate_configs order.
long long config_index(const TokenConfig& c);

// The supertoken graph of g with k tokens, materialized as an explicit graph.
// Vertex i of .graph corresponds to .configs[i-1]; two configs are adjacent
// iff one is obtained from the other by moving a single token along an edge
// of the base graph.
struct SupertokenGraph {
    Graph base;
    int tokens;
    Graph graph;
    std::vector<TokenConfig> configs;
};

SupertokenGraph build_supertoken(const Graph& g, int k,
                                 long long max_vertices = kDefaultVertexCap);

// The token graph of g with k tokens (distinguishable positions, at most one
// token per vertex): vertices are k-subsets of V(g) in ascending
// lexicographic order; subsets are adjacent iff their symmetric difference is
// an edge of g.
struct TokenGraph {
    Graph base;
    int tokens;
    Graph graph;
    std::vector<std::vector<int>> subsets;
};

TokenGraph build_token_graph(const Graph& g, int k,
                             long long max_vertices = kDefaultVertexCap);

// Closed forms valid when the base graph is complete (K_n).
long long dist_complete(const TokenConfig& x, const TokenConfig& y);
long long ecc_complete(const TokenConfig& x);
long long diam_complete(int n, int k);
long long rad_complete(int n, int k);

// Surplus/deficit multiset pair extracted from two configs on the same base:
// vertex i appears x_i - y_i times in surplus when x_i > y_i, and mirrored
// for deficit. Both sides always have equal size.
struct MatchingInstance {
    std::vector<int> surplus;
    std::vector<int> deficit;

    int size() const { return static_cast<int>(surplus.size()); }
};

MatchingInstance build_matching_instance(const TokenConfig& x, const TokenConfig& y);

struct TokenMove {
    int from = 0;
    int to = 0; // always an edge of the base graph

    bool operator==(const TokenMove&) const = default;
};

struct SupertokenDistance {
    long long distance = 0;
    std::vector<TokenMove> moves; // replaying them transforms x into y
};

// Distance between two configs in the supertoken graph of g, computed without
// materializing it: solve a min-weight assignment between surplus and deficit
// vertices under base-graph distances.
SupertokenDistance supertoken_distance(const Graph& g, const TokenConfig& x,
                                       const TokenConfig& y);

// Explicit-BFS invariants of the supertoken graph (cap-guarded).
long long supertoken_eccentricity(const Graph& g, int k, const TokenConfig& x,
                                  long long max_vertices = kDefaultVertexCap);
long long supertoken_diameter(const Graph& g, int k,
                              long long max_vertices = kDefaultVertexCap);
long long supertoken_radius(const Graph& g, int k,
                            long long max_vertices = kDefaultVertexCap);

// For mutually antipodal base vertices (pairwise at distance diam(g)), the
// configs putting all k tokens on each vertex are pairwise at supertoken
// distance k * diam(g).
std::vector<TokenConfig> antipodal_witnesses(const Graph& g, int k,
                                             const std::vector<int>& vertices);

} // namespace stg
