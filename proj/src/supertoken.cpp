#include "stg/supertoken.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <stdexcept>

#include "stg/assignment.hpp"
#include "stg/errors.hpp"

namespace stg {
namespace {

long long checked_cap_count(const BigInt& count, long long cap, const char* what) {
    if (count > to_bigint(cap))
        throw SizeCapError(std::string(what) + " would have " + count.get_str() +
                           " vertices, above the cap of " + std::to_string(cap));
    return count.get_si();
}

// Binary search in a descending-lex sorted config list; 1-based result.
int lookup_index(const std::vector<TokenConfig>& configs, const std::vector<int>& counts) {
    auto it = std::lower_bound(configs.begin(), configs.end(), counts,
                               [](const TokenConfig& a, const std::vector<int>& b) {
                                   return a.counts() > b;
                               });
    return static_cast<int>(it - configs.begin()) + 1;
}

} // namespace

TokenConfig::TokenConfig(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty())
        throw std::invalid_argument("config needs at least one vertex");
    long long total = 0;
    for (int c : counts_) {
        if (c < 0)
            throw std::invalid_argument("config counts must be non-negative");
        total += c;
    }
    if (total > std::numeric_limits<int>::max())
        throw std::invalid_argument("config token total overflows");
    total_ = static_cast<int>(total);
}

TokenConfig TokenConfig::all_on(int n, int k, int vertex) {
    if (n < 1 || k < 0 || vertex < 1 || vertex > n)
        throw std::invalid_argument("all_on: bad arguments");
    std::vector<int> counts(n, 0);
    counts[vertex - 1] = k;
    return TokenConfig(std::move(counts));
}

std::string TokenConfig::label() const {
    std::string out;
    if (total_ <= 9) {
        for (int c : counts_)
            out += static_cast<char>('0' + c);
    } else {
        for (size_t i = 0; i < counts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(counts_[i]);
        }
    }
    return out;
}

TokenConfig TokenConfig::parse(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty config string");
    std::vector<int> counts;
    if (text.find(',') != std::string::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            const size_t comma = text.find(',', start);
            const std::string part =
                text.substr(start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
            if (part.empty() || part.size() > 9 ||
                !std::all_of(part.begin(), part.end(),
                             [](unsigned char ch) { return std::isdigit(ch); }))
                throw std::invalid_argument("bad config component '" + part + "'");
            counts.push_back(std::stoi(part));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("bad config digit '" + std::string(1, ch) + "'");
            counts.push_back(ch - '0');
        }
    }
    return TokenConfig(std::move(counts));
}

BigInt supertoken_order(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("supertoken_order needs n >= 1, k >= 0");
    return binomial(static_cast<long long>(n) + k - 1, k);
}

std::vector<TokenConfig> enumerate_configs(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("enumerate_configs needs n >= 1, k >= 0");
    std::vector<TokenConfig> out;
    std::vector<int> current(n, 0);
    // Descending choice at each position yields descending lex order overall.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            current[pos] = remaining;
            out.emplace_back(current);
            return;
        }
        for (int take = remaining; take >= 0; --take) {
            current[pos] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    rec(rec, 0, k);
    return out;
}

long long config_index(const TokenConfig& c) {
    const int n = c.vertex_count();
    int remaining = c.token_total();
    BigInt index = 1;
    for (int p = 0; p + 1 < n; ++p) {
        const int spots = n - 1 - p;
        // Predecessors place more than c[p] tokens here; hockey-stick sum of
        // the completions collapses to a single binomial.
        index += binomial(static_cast<long long>(remaining) - c.counts()[p] - 1 + spots,
                          spots);
        remaining -= c.counts()[p];
    }
    if (!index.fits_slong_p())
        throw std::overflow_error("config index exceeds machine range");
    return index.get_si();
}

SupertokenGraph build_supertoken(const Graph& g, int k, long long max_vertices) {
    if (k < 0)
        throw std::invalid_argument("token count must be non-negative");
    const int n = g.order();
    checked_cap_count(supertoken_order(n, k), max_vertices, "supertoken graph");

    auto configs = enumerate_configs(n, k);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> scratch;
    for (int a = 1; a <= static_cast<int>(configs.size()); ++a) {
        const auto& counts = configs[a - 1].counts();
        for (int u = 1; u <= n; ++u) {
            if (counts[u - 1] == 0)
                continue;
            for (int w : g.neighbors(u)) {
                scratch = counts;
                --scratch[u - 1];
                ++scratch[w - 1];
                const int b = lookup_index(configs, scratch);
                if (a < b)
                    edges.emplace_back(a, b);
            }
        }
    }
    Graph st(static_cast<int>(configs.size()), std::move(edges));
    return SupertokenGraph{g, k, std::move(st), std::move(configs)};
}

TokenGraph build_token_graph(const Graph& g, int k, long long max_vertices) {
    const int n = g.order();
    if (k < 1 || k > n)
        throw std::invalid_argument("token graph needs 1 <= k <= n");
    checked_cap_count(binomial(n, k), max_vertices, "token graph");

    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    while (true) {
        subsets.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i))
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }

    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= static_cast<int>(subsets.size()); ++a) {
        const auto& s = subsets[a - 1];
        for (int u : s) {
            for (int w : g.neighbors(u)) {
                if (std::binary_search(s.begin(), s.end(), w))
                    continue;
                std::vector<int> t;
                t.reserve(k);
                for (int v : s)
                    if (v != u)
                        t.push_back(v);
                t.insert(std::upper_bound(t.begin(), t.end(), w), w);
                const auto it = std::lower_bound(subsets.begin(), subsets.end(), t);
                const int b = static_cast<int>(it - subsets.begin()) + 1;
                if (a < b)
                    edges.emplace_back(a, b);
            }
        }
    }
    Graph tg(static_cast<int>(subsets.size()), std::move(edges));
    return TokenGraph{g, k, std::move(tg), std::move(subsets)};
}

namespace {

void check_same_shape(const TokenConfig& x, const TokenConfig& y) {
    if (x.vertex_count() != y.vertex_count())
        throw std::invalid_argument("configs live on different vertex sets");
    if (x.token_total() != y.token_total())
        throw std::invalid_argument("configs have different token totals");
}

} // namespace

long long dist_complete(const TokenConfig& x, const TokenConfig& y) {
    check_same_shape(x, y);
    long long sum = 0;
    for (int i = 0; i < x.vertex_count(); ++i)
        sum += std::abs(x.counts()[i] - y.counts()[i]);
    return sum / 2;
}

long long ecc_complete(const TokenConfig& x) {
    return x.token_total() - *std::min_element(x.counts().begin(), x.counts().end());
}

long long diam_complete(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("diam_complete needs n >= 1, k >= 0");
    return n == 1 ? 0 : k;
}

long long rad_complete(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("rad_complete needs n >= 1, k >= 0");
    return k - k / n;
}

MatchingInstance build_matching_instance(const TokenConfig& x, const TokenConfig& y) {
    check_same_shape(x, y);
    MatchingInstance inst;
    for (int i = 1; i <= x.vertex_count(); ++i) {
        const int diff = x.at(i) - y.at(i);
        for (int t = 0; t < diff; ++t)
            inst.surplus.push_back(i);
        for (int t = 0; t < -diff; ++t)
            inst.deficit.push_back(i);
    }
    return inst;
}

SupertokenDistance supertoken_distance(const Graph& g, const TokenConfig& x,
                                       const TokenConfig& y) {
    if (x.vertex_count() != g.order())
        throw std::invalid_argument("config does not match the base graph order");
    const auto inst = build_matching_instance(x, y);
    if (inst.size() == 0)
        return {};

    // One BFS per distinct deficit vertex covers both the cost matrix and the
    // later walk reconstruction.
    std::map<int, std::vector<int>> dist_to;
    for (int j : inst.deficit)
        if (!dist_to.count(j))
            dist_to.emplace(j, bfs_distances(g, j));

    const int m = inst.size();
    std::vector<std::vector<long long>> cost(m, std::vector<long long>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            cost[r][c] = dist_to.at(inst.deficit[c])[inst.surplus[r]];
    const auto assignment = solve_assignment(CostMatrix(std::move(cost)));

    SupertokenDistance result;
    result.distance = assignment.total_weight;
    for (int r = 0; r < m; ++r) {
        const int target = inst.deficit[assignment.row_to_col[r]];
        const auto& dist = dist_to.at(target);
        int v = inst.surplus[r];
        while (v != target) {
            int next = 0;
            for (int w : g.neighbors(v)) // ascending, so first hit is smallest
                if (dist[w] == dist[v] - 1) {
                    next = w;
                    break;
                }
            result.moves.push_back({v, next});
            v = next;
        }
    }
    return result;
}

long long supertoken_eccentricity(const Graph& g, int k, const TokenConfig& x,
                                  long long max_vertices) {
    if (x.vertex_count() != g.order() || x.token_total() != k)
        throw std::invalid_argument("config does not match the requested space");
    const auto st = build_supertoken(g, k, max_vertices);
    return eccentricity(st.graph, static_cast<int>(config_index(x)));
}

long long supertoken_diameter(const Graph& g, int k, long long max_vertices) {
    const auto st = build_supertoken(g, k, max_vertices);
    return diameter(st.graph);
}

long long supertoken_radius(const Graph& g, int k, long long max_vertices) {
    const auto st = build_supertoken(g, k, max_vertices);
    return radius(st.graph);
}

std::vector<TokenConfig> antipodal_witnesses(const Graph& g, int k,
                                             const std::vector<int>& vertices) {
    if (k < 0)
        throw std::invalid_argument("token count must be non-negative");
    if (vertices.size() < 2)
        throw std::invalid_argument("need at least two vertices");
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("vertices must be distinct");
    if (vs.front() < 1 || vs.back() > g.order())
        throw std::invalid_argument("vertex out of range");

    const int diam = diameter(g);
    for (size_t a = 0; a < vs.size(); ++a) {
        const auto dist = bfs_distances(g, vs[a]);
        for (size_t b = a + 1; b < vs.size(); ++b)
            if (dist[vs[b]] != diam)
                throw std::invalid_argument(
                    "vertices " + std::to_string(vs[a]) + " and " + std::to_string(vs[b]) +
                    " are not at diameter distance");
    }

    std::vector<TokenConfig> out;
    for (int v : vs)
        out.push_back(TokenConfig::all_on(g.order(), k, v));
    return out;
}

} // namespace stg
