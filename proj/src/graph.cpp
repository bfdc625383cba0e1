#include "stg/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace stg {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [i, j] : edges) {
        if (i == j)
            throw std::invalid_argument("loop edge " + std::to_string(i));
        if (i > j)
            std::swap(i, j);
        if (i < 1 || j > n)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_ + 1, {});
    for (auto [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    // Lex-sorted edges make every adjacency list come out ascending: for a
    // vertex v, neighbors below v arrive first (ordered), then those above.
    for (int v = 1; v <= n_; ++v)
        if (!std::is_sorted(adj_[v].begin(), adj_[v].end()))
            std::sort(adj_[v].begin(), adj_[v].end());

    const auto dist = bfs_distances(*this, 1);
    for (int v = 1; v <= n_; ++v)
        if (dist[v] < 0)
            throw std::invalid_argument("graph is not connected");
}

Graph Graph::complete(int n) {
    if (n < 1)
        throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
    if (n < 1)
        throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 1 || source > g.order())
        throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(g.order() + 1, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
    d_.resize(static_cast<size_t>(n_) * n_);
    for (int u = 1; u <= n_; ++u) {
        const auto dist = bfs_distances(g, u);
        for (int v = 1; v <= n_; ++v)
            d_[static_cast<size_t>(u - 1) * n_ + (v - 1)] = dist[v];
    }
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

int eccentricity(const Graph& g, int v) {
    const auto dist = bfs_distances(g, v);
    return *std::max_element(dist.begin() + 1, dist.end());
}

int diameter(const Graph& g) {
    int best = 0;
    for (int v = 1; v <= g.order(); ++v)
        best = std::max(best, eccentricity(g, v));
    return best;
}

int radius(const Graph& g) {
    int best = g.order();
    for (int v = 1; v <= g.order(); ++v)
        best = std::min(best, eccentricity(g, v));
    return best;
}

Extremes extremal_distances(const Graph& g) {
    const int n = g.order();
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> lo(n + 1, 0), hi(n + 1, inf);
    std::vector<char> live(n + 1, 1);
    int diam_lo = 0, rad_hi = inf;
    bool pick_max = true; // alternate: stretch the diameter, squeeze the radius
    int remaining = n;
    while (remaining > 0) {
        int v = 0;
        for (int w = 1; w <= n; ++w) {
            if (!live[w])
                continue;
            if (v == 0 || (pick_max ? hi[w] > hi[v] : lo[w] < lo[v]))
                v = w;
        }
        pick_max = !pick_max;
        const std::vector<int> dist = bfs_distances(g, v);
        const int ecc = *std::max_element(dist.begin() + 1, dist.end());
        diam_lo = std::max(diam_lo, ecc);
        rad_hi = std::min(rad_hi, ecc);
        for (int w = 1; w <= n; ++w) {
            if (!live[w])
                continue;
            lo[w] = std::max({lo[w], dist[w], ecc - dist[w]});
            hi[w] = std::min(hi[w], ecc + dist[w]);
            // w is settled once it can neither push the diameter above
            // diam_lo nor pull the radius below rad_hi.
            if (hi[w] <= diam_lo && lo[w] >= rad_hi) {
                live[w] = 0;
                --remaining;
            }
        }
    }
    return {diam_lo, rad_hi};
}

int bounded_radius(const Graph& g) {
    const int n = g.order();
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> lo(n + 1, 0);
    std::vector<char> live(n + 1, 1);
    int rad_hi = inf;
    int remaining = n;
    while (remaining > 0) {
        int v = 0;
        for (int w = 1; w <= n; ++w)
            if (live[w] && (v == 0 || lo[w] < lo[v]))
                v = w;
        const std::vector<int> dist = bfs_distances(g, v);
        const int ecc = *std::max_element(dist.begin() + 1, dist.end());
        rad_hi = std::min(rad_hi, ecc);
        for (int w = 1; w <= n; ++w) {
            if (!live[w])
                continue;
            lo[w] = std::max({lo[w], dist[w], ecc - dist[w]});
            if (lo[w] >= rad_hi) { // w cannot beat the best eccentricity seen
                live[w] = 0;
                --remaining;
            }
        }
    }
    return rad_hi;
}

std::optional<DistanceDegreeSequence> distance_degree_sequence(const Graph& g) {
    const int diam = diameter(g);
    std::vector<int> counts;
    for (int v = 1; v <= g.order(); ++v) {
        const auto dist = bfs_distances(g, v);
        std::vector<int> here(diam + 1, 0);
        for (int w = 1; w <= g.order(); ++w) {
            if (dist[w] > diam)
                return std::nullopt; // eccentricity below diam truncates the profile
            ++here[dist[w]];
        }
        if (v == 1)
            counts = here;
        else if (here != counts)
            return std::nullopt;
    }
    return DistanceDegreeSequence{counts};
}

long long row_sum(const DistanceDegreeSequence& seq) {
    long long total = 0;
    for (size_t i = 0; i < seq.counts.size(); ++i)
        total += static_cast<long long>(i) * seq.counts[i];
    return total;
}

bool is_edge_preserving_bijection(const Graph& a, const Graph& b,
                                  const std::vector<int>& map) {
    const int n = a.order();
    if (b.order() != n || a.size() != b.size())
        return false;
    if (static_cast<int>(map.size()) != n + 1)
        return false;
    std::vector<bool> hit(n + 1, false);
    for (int v = 1; v <= n; ++v) {
        if (map[v] < 1 || map[v] > n || hit[map[v]])
            return false;
        hit[map[v]] = true;
    }
    for (auto [i, j] : a.edges())
        if (!b.has_edge(map[i], map[j]))
            return false;
    return true; // equal edge counts make the converse direction automatic
}

std::vector<Graph> all_connected_graphs(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("all_connected_graphs supports 1 <= n <= 7");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs.emplace_back(i, j);
    const int p = static_cast<int>(pairs.size());

    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < p; ++b)
            if (mask >> b & 1u)
                edges.push_back(pairs[b]);
        // quick connectivity check before paying for construction
        std::vector<int> comp(n + 1);
        for (int v = 1; v <= n; ++v)
            comp[v] = v;
        const auto find = [&](int v) {
            while (comp[v] != v)
                v = comp[v] = comp[comp[v]];
            return v;
        };
        int parts = n;
        for (auto [i, j] : edges) {
            const int a = find(i), b = find(j);
            if (a != b) {
                comp[a] = b;
                --parts;
            }
        }
        if (parts == 1)
            out.emplace_back(n, std::move(edges));
    }
    return out;
}

Graph random_tree(int n, std::mt19937& rng) {
    if (n < 1)
        throw std::invalid_argument("tree needs n >= 1");
    if (n == 1)
        return Graph(1, {});
    if (n == 2)
        return Graph(2, {{1, 2}});

    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer)
        x = pick(rng);

    std::vector<int> degree(n + 1, 1);
    for (int x : prufer)
        ++degree[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n + 1, false);
    for (int x : prufer) {
        for (int leaf = 1; leaf <= n; ++leaf)
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, x);
                used[leaf] = true;
                --degree[x];
                break;
            }
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1 && !used[v]) {
            if (!a)
                a = v;
            else
                b = v;
        }
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [i, j] : g.edges())
        out << i << ' ' << j << '\n';
}

Graph read_graph(std::istream& in) {
    // Strip '#' comments (to end of line) before tokenizing, so label
    // annotations emitted by `export --format edges` round-trip.
    std::string filtered, line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        filtered += line;
        filtered += '\n';
    }
    std::istringstream text(filtered);
    long long n = 0, m = 0;
    if (!(text >> n >> m))
        throw std::invalid_argument("graph file: missing 'n m' header");
    if (n < 1 || m < 0)
        throw std::invalid_argument("graph file: bad header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long e = 0; e < m; ++e) {
        long long i = 0, j = 0;
        if (!(text >> i >> j))
            throw std::invalid_argument("graph file: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(e));
        if (i < 1 || j < 1 || i > n || j > n)
            throw std::invalid_argument("graph file: edge endpoint out of range");
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    std::string rest;
    if (text >> rest)
        throw std::invalid_argument("graph file: trailing content '" + rest + "'");
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
    for (size_t i = 0; i < labels.size(); ++i)
        out << (i + 1) << ' ' << labels[i] << '\n';
}

} // namespace stg
