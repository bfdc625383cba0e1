#pragma once

#include <iosfwd>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace stg {

// Simple connected undirected graph on vertices 1..n.
//
// Edges are stored as pairs (i, j) with i < j, sorted lexicographically.
// Adjacency lists come out sorted ascending, which downstream code relies on
// for deterministic tie-breaking.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    static Graph complete(int n); // K_n, n >= 1
    static Graph cycle(int n);    // C_n, n >= 3
    static Graph path(int n);     // P_n, n >= 1

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_; // adj_[0] unused
};

// Distances from source to every vertex; index 0 is unused (-1).
std::vector<int> bfs_distances(const Graph& g, int source);

// Dense all-pairs distance matrix with 1-based accessors.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u - 1) * n_ + (v - 1)]; }

private:
    int n_;
    std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

int eccentricity(const Graph& g, int v);
int diameter(const Graph& g);
int radius(const Graph& g);

struct Extremes {
    int diameter = 0;
    int radius = 0;
};

// Exact diameter and radius together, via eccentricity bounding: BFS from a
// chosen vertex tightens lower/upper eccentricity bounds of every other
// vertex, and vertices whose bounds can no longer affect either value drop
// out. Usually needs only a handful of sweeps; never worse than all-pairs.
Extremes extremal_distances(const Graph& g);

// Exact radius alone, same bounding idea but pruning only against the radius.
// Much faster than extremal_distances when the diameter is already known.
int bounded_radius(const Graph& g);

// Distance-degree sequence (k_0, k_1, ..., k_d): k_i = number of vertices at
// distance i from any fixed vertex, defined only when that count is the same
// from every vertex. k_0 is always 1.
struct DistanceDegreeSequence {
    std::vector<int> counts;

    int max_distance() const { return static_cast<int>(counts.size()) - 1; }
};

std::optional<DistanceDegreeSequence> distance_degree_sequence(const Graph& g);

// Row sum of the distance matrix of a degree-regular graph: sum of i * k_i.
long long row_sum(const DistanceDegreeSequence& seq);

// Does map (1-based; map[0] ignored) define an isomorphism from a to b?
bool is_edge_preserving_bijection(const Graph& a, const Graph& b,
                                  const std::vector<int>& map);

// Every connected graph on n labeled vertices, n <= 7 (enumeration by edge
// subset; counts grow fast).
std::vector<Graph> all_connected_graphs(int n);

// Uniform random labeled tree on n vertices, decoded from a Prufer sequence.
Graph random_tree(int n, std::mt19937& rng);

// Plain text graph format: first line "n m", then m lines "i j" with i < j,
// sorted lexicographically. The reader drops '#' comments to end of line.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

// Label sidecar: one line per vertex, "index label".
void write_labels(std::ostream& out, const std::vector<std::string>& labels);

} // namespace stg
