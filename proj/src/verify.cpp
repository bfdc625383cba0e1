#include "stg/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stg/alphabet.hpp"
#include "stg/assignment.hpp"
#include "stg/errors.hpp"
#include "stg/exact.hpp"
#include "stg/graph.hpp"
#include "stg/metric_dim.hpp"
#include "stg/supertoken.hpp"

namespace stg::verify {
namespace {

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    void check(const std::string& claim, const std::string& instance, bool ok,
               std::string detail = "") {
        records_.push_back({name_, claim, instance, ok ? "PASS" : "FAIL",
                            std::move(detail)});
    }

    // Comparisons against published values that our own computations
    // contradict are reported as WARN, not FAIL: the implementation is
    // internally consistent either way.
    void against_published(const std::string& claim, const std::string& instance,
                           bool matches, std::string detail = "") {
        records_.push_back({name_, claim, instance, matches ? "PASS" : "WARN",
                            std::move(detail)});
    }

    std::vector<CheckRecord> take() { return std::move(records_); }

private:
    std::string name_;
    std::vector<CheckRecord> records_;
};

// Replay a move list and confirm it is a genuine walk from x to y: every step
// follows a base edge, counts never go negative, and the length matches.
bool replay_ok(const Graph& g, const TokenConfig& x, const TokenConfig& y,
               const SupertokenDistance& result) {
    if (static_cast<long long>(result.moves.size()) != result.distance)
        return false;
    std::vector<int> counts = x.counts();
    for (const auto& move : result.moves) {
        if (!g.has_edge(move.from, move.to))
            return false;
        if (--counts[move.from - 1] < 0)
            return false;
        ++counts[move.to - 1];
    }
    return counts == y.counts();
}

// ---------------------------------------------------------------- theorem1

std::vector<CheckRecord> run_theorem1() {
    Suite s("theorem1");

    {
        std::mt19937 rng(20250816u);
        bool ok = true;
        std::string bad;
        for (int trial = 0; trial < 60 && ok; ++trial) {
            const int n = 2 + trial % 9; // n in [2,10]
            const Graph t = random_tree(n, rng);
            if (determinant(distance_matrix(t)) != tree_det_formula(n)) {
                ok = false;
                bad = "tree on " + std::to_string(n) + " vertices";
            }
        }
        s.check("tree distance determinant equals (-1)^(n-1) (n-1) 2^(n-2)",
                "60 random trees, n in [2,10]", ok, bad);
    }

    {
        bool ok = true;
        for (int n = 2; n <= 9; ++n) {
            ok = ok && determinant(distance_matrix(Graph::path(n))) == tree_det_formula(n);
            // star: center 1
            std::vector<std::pair<int, int>> e;
            for (int v = 2; v <= n; ++v)
                e.emplace_back(1, v);
            ok = ok && determinant(distance_matrix(Graph(n, e))) == tree_det_formula(n);
        }
        s.check("path and star determinants equal the tree closed form",
                "P_n and K_{1,n-1}, n in [2,9]", ok);
    }

    {
        bool ok = true;
        std::string bad;
        for (int n = 4; n <= 12; n += 2)
            if (determinant(distance_matrix(Graph::cycle(n))) != 0) {
                ok = false;
                bad = "C_" + std::to_string(n);
            }
        s.check("even cycle distance determinant is zero", "C_4 .. C_12", ok, bad);
    }

    {
        bool ok = true;
        std::string bad;
        int instances = 0;
        for (int k = 1; k <= 4 && ok; ++k) {
            const int cyc = 2 * k + 1;
            for (int m = 0; m <= 3 && ok; ++m) {
                // two attachment patterns: clustered on vertex 1, and spread
                for (int pattern = 0; pattern < 2 && ok; ++pattern) {
                    if (pattern == 1 && m > cyc)
                        continue;
                    std::vector<std::pair<int, int>> e;
                    for (int i = 1; i < cyc; ++i)
                        e.emplace_back(i, i + 1);
                    e.emplace_back(1, cyc);
                    for (int p = 0; p < m; ++p)
                        e.emplace_back(pattern == 0 ? 1 : p + 1, cyc + p + 1);
                    const Graph g(cyc + m, e);
                    const BigRat expect = unicyclic_odd_det_formula(k, m);
                    if (BigRat(determinant(distance_matrix(g))) != expect) {
                        ok = false;
                        bad = "C_" + std::to_string(cyc) + " with " + std::to_string(m) +
                              " pendants (pattern " + std::to_string(pattern) + ")";
                    }
                    ++instances;
                }
            }
        }
        s.check("odd unicyclic determinant equals (-2)^m (k(k+1) + (2k+1)m/2)",
                std::to_string(instances) + " cycles C_3..C_9 with 0..3 pendants", ok, bad);
    }

    {
        const bool ok = determinant(distance_matrix(Graph::path(3))) == 4 &&
                        determinant(distance_matrix(Graph::cycle(5))) == 6 &&
                        determinant(distance_matrix(Graph::cycle(6))) == 0;
        s.check("frozen determinants", "det D(P_3)=4, det D(C_5)=6, det D(C_6)=0", ok);
    }

    {
        // k=1, m=1: the formula gives (-2)(2 + 3/2) = -7, and the direct
        // determinant of the triangle with one pendant agrees.
        const Graph g(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
        const BigInt direct = determinant(distance_matrix(g));
        const bool ok = direct == -7 && BigRat(direct) == unicyclic_odd_det_formula(1, 1);
        s.check("triangle plus one pendant determinant", "k=1, m=1",
                ok, "direct determinant " + direct.get_str());
    }

    return s.take();
}

// --------------------------------------------------------------------- gdc

std::vector<CheckRecord> run_gdc() {
    Suite s("gdc");

    // Exhaustive Chebyshev-vs-BFS sweep over every word graph with at most
    // 2000 vertices.
    {
        bool cheb_ok = true, diam_ok = true, ecc_ok = true, index_ok = true;
        std::string cheb_bad, diam_bad, ecc_bad, index_bad;
        long long printed_ecc_mismatches = 0;
        std::string printed_ecc_example;
        int graphs = 0;
        long long pairs = 0;
        for (int d = 2; d <= 2000; ++d) {
            long long v = 1;
            for (int c = 1; v <= 2000 / d; ++c) {
                v *= d;
                const auto ag = build_gdc(d, c);
                ++graphs;
                const int n = ag.graph.order();
                const std::string inst = "d=" + std::to_string(d) + ",c=" + std::to_string(c);
                for (int a = 1; a <= n; ++a)
                    if (word_index(d, c, ag.words[a - 1]) != a && index_ok) {
                        index_ok = false;
                        index_bad = inst;
                    }
                int diam_bfs = 0;
                for (int a = 1; a <= n; ++a) {
                    const auto dist = bfs_distances(ag.graph, a);
                    int ecc_bfs = 0;
                    for (int b = 1; b <= n; ++b) {
                        ++pairs;
                        ecc_bfs = std::max(ecc_bfs, dist[b]);
                        if (gdc_distance(ag.words[a - 1], ag.words[b - 1]) != dist[b] &&
                            cheb_ok) {
                            cheb_ok = false;
                            cheb_bad = inst + " words " + word_label(ag.words[a - 1]) +
                                       "," + word_label(ag.words[b - 1]);
                        }
                    }
                    diam_bfs = std::max(diam_bfs, ecc_bfs);
                    if (gdc_eccentricity(ag.words[a - 1], d) != ecc_bfs && ecc_ok) {
                        ecc_ok = false;
                        ecc_bad = inst + " word " + word_label(ag.words[a - 1]);
                    }
                    int printed = 0;
                    for (int letter : ag.words[a - 1])
                        printed = std::max({printed, letter, d - letter});
                    if (printed != ecc_bfs) {
                        ++printed_ecc_mismatches;
                        if (printed_ecc_example.empty())
                            printed_ecc_example =
                                inst + " word " + word_label(ag.words[a - 1]) + ": printed " +
                                std::to_string(printed) + ", actual " + std::to_string(ecc_bfs);
                    }
                }
                if (diam_bfs != gdc_diameter(d, c) && diam_ok) {
                    diam_ok = false;
                    diam_bad = inst;
                }
            }
        }
        const std::string scope =
            std::to_string(graphs) + " graphs with d^c <= 2000, " + std::to_string(pairs) +
            " ordered pairs";
        s.check("Chebyshev distance equals BFS distance", scope, cheb_ok, cheb_bad);
        s.check("eccentricity equals max(x_i - 1, d - x_i) maximized over i", scope,
                ecc_ok, ecc_bad);
        s.check("diameter equals d - 1", scope, diam_ok, diam_bad);
        s.check("word index round-trips through enumeration", scope, index_ok, index_bad);
        s.against_published("published eccentricity form max(x_i, d - x_i)", scope,
                            printed_ecc_mismatches == 0,
                            printed_ecc_mismatches
                                ? std::to_string(printed_ecc_mismatches) +
                                      " mismatches, first: " + printed_ecc_example
                                : "");
    }

    // Attachment-vertex family.
    {
        bool order_ok = true, diam_ok = true;
        std::string order_bad, diam_bad;
        long long claim_mismatches = 0;
        std::string claim_example;
        std::vector<std::string> resolve_failures;
        int graphs = 0;
        for (int d = 2; d <= 500; ++d) {
            long long v = 1;
            for (int c = 1;; ++c) {
                if (v > 500 / d)
                    break;
                v *= d;
                if (v + c > 500)
                    break;
                const auto ag = build_gdc_plus(d, c);
                ++graphs;
                const std::string inst = "d=" + std::to_string(d) + ",c=" + std::to_string(c);
                const int base = static_cast<int>(ag.words.size());
                if (ag.graph.order() != base + c) {
                    order_ok = false;
                    order_bad = inst;
                }
                if (diameter(ag.graph) != d) {
                    diam_ok = false;
                    diam_bad = inst;
                }
                for (int i = 0; i < c; ++i) {
                    const auto dist = bfs_distances(ag.graph, base + i + 1);
                    for (int a = 1; a <= base; ++a)
                        if (dist[a] != ag.words[a - 1][i]) {
                            ++claim_mismatches;
                            if (claim_example.empty())
                                claim_example = inst + " word " + word_label(ag.words[a - 1]) +
                                                " vs w" + std::to_string(i + 1) + ": claimed " +
                                                std::to_string(ag.words[a - 1][i]) + ", actual " +
                                                std::to_string(dist[a]);
                        }
                }
                LandmarkSet att(c);
                for (int i = 0; i < c; ++i)
                    att[i] = base + i + 1;
                if (!is_resolving(ag.graph, att))
                    resolve_failures.push_back(inst);
            }
        }
        const std::string scope =
            std::to_string(graphs) + " extended graphs with d^c + c <= 500";
        s.check("extended graph order is d^c + c", scope, order_ok, order_bad);
        s.check("extended graph diameter is d", scope, diam_ok, diam_bad);
        s.against_published("published attachment distances dist(x, w_i) = x_i", scope,
                            claim_mismatches == 0,
                            claim_mismatches
                                ? std::to_string(claim_mismatches) +
                                      " mismatches (every d >= 4: a letter 1 elsewhere gives a "
                                      "2-step shortcut through that attachment), first: " +
                                      claim_example
                                : "");
        std::string fails;
        for (const auto& f : resolve_failures)
            fails += (fails.empty() ? "" : "; ") + f;
        s.against_published("published claim: the attachment set resolves", scope,
                            resolve_failures.empty(),
                            resolve_failures.empty() ? "" : "fails for " + fails);
    }

    {
        // Exhaustive dimension of small extended graphs vs the published
        // value c.
        struct Case { int d, c; };
        bool small_ok = true;
        std::string computed;
        std::string mismatches;
        for (const Case t : {Case{2, 2}, Case{3, 2}, Case{2, 3}, Case{2, 4}, Case{3, 3},
                             Case{4, 2}, Case{5, 2}, Case{6, 2}}) {
            const auto ag = build_gdc_plus(t.d, t.c);
            const auto result = metric_dimension(ag.graph, -1, 40);
            const std::string inst =
                "d=" + std::to_string(t.d) + ",c=" + std::to_string(t.c);
            computed += (computed.empty() ? "" : "; ") + inst + ": " +
                        std::to_string(result.dimension);
            if (!result.exact || result.dimension != t.c) {
                small_ok = false;
                mismatches += (mismatches.empty() ? "" : "; ") + inst;
            }
        }
        s.against_published("published dimension c for extended word graphs",
                            "d in [2,6], c in [2,4], order <= 40", small_ok,
                            "computed " + computed);
    }

    {
        const bool ok = lower_bound_dim(18, 4) == 2 && lower_bound_dim(100, 3) == 5 &&
                        lower_bound_dim(5, 4) == 1 && lower_bound_dim(5, 1) == 4 &&
                        lower_bound_dim(2, 1) == 1;
        s.check("order/diameter dimension lower bound frozen values",
                "(n,d) = (18,4),(100,3),(5,4),(5,1),(2,1)", ok);
    }

    {
        bool ok = true;
        std::string bad;
        struct Inst {
            std::string name;
            Graph g;
        };
        std::vector<Inst> insts;
        insts.push_back({"C_5", Graph::cycle(5)});
        insts.push_back({"C_6", Graph::cycle(6)});
        insts.push_back({"P_7", Graph::path(7)});
        insts.push_back({"K_5", Graph::complete(5)});
        insts.push_back({"G(3,2)", build_gdc(3, 2).graph});
        insts.push_back({"G+(3,2)", build_gdc_plus(3, 2).graph});
        insts.push_back({"G+(4,2)", build_gdc_plus(4, 2).graph});
        for (const auto& [name, g] : insts) {
            const auto dim = metric_dimension(g, -1, 40);
            if (!dim.exact || lower_bound_dim(g.order(), diameter(g)) > dim.dimension) {
                ok = false;
                bad = name;
            }
        }
        s.check("dimension lower bound never exceeds the exhaustive dimension",
                "7 assorted graphs", ok, bad);
    }

    {
        const DistanceDegreeSequence k3{{1, 2}};
        const DistanceDegreeSequence c5{{1, 2, 2}};
        const bool ok = count_bounded_sequences(2, k3, true) == 3 &&
                        count_bounded_sequences(2, k3, false) == 1 &&
                        count_bounded_sequences(1, c5, false) == 2 &&
                        count_bounded_sequences(1, c5, true) == 3 &&
                        count_bounded_sequences(0, c5, false) == 1;
        s.check("capped tuple counts, frozen values", "counts (1,2) and (1,2,2)", ok);
    }

    {
        bool ok = true;
        try {
            degree_regular_dim_bound(Graph::path(3), 1);
            ok = false; // P_3 is not degree-regular; must throw
        } catch (const std::invalid_argument&) {
        }
        ok = ok && !degree_regular_dim_bound(Graph::cycle(5), 1) &&
             degree_regular_dim_bound(Graph::cycle(5), 2) &&
             degree_regular_dim_bound(Graph::complete(3), 2) &&
             !degree_regular_dim_bound(Graph::cycle(6), 1);
        s.check("degree-regular counting bound",
                "C_5 (mu=1 impossible, mu=2 open), K_3, C_6, P_3 rejected", ok);
    }

    return s.take();
}

// ---------------------------------------------------------------- complete

std::vector<CheckRecord> run_complete() {
    Suite s("complete");

    {
        bool dist_ok = true, ecc_ok = true, diam_ok = true, rad_ok = true, match_ok = true;
        std::string bad;
        std::vector<std::pair<std::string, std::string>> printed_radius_mismatch;
        long long pairs = 0;
        for (int n = 2; n <= 5; ++n) {
            const Graph kn = Graph::complete(n);
            for (int k = 1; k <= 4; ++k) {
                const auto st = build_supertoken(kn, k);
                const int v = st.graph.order();
                const bool bfs_scope = n <= 4; // exhaustive BFS comparison
                int diam_bfs = 0, rad_bfs = v;
                for (int a = 1; a <= v; ++a) {
                    const auto dist = bfs_distances(st.graph, a);
                    int ecc_bfs = 0;
                    for (int b = 1; b <= v; ++b) {
                        ecc_bfs = std::max(ecc_bfs, dist[b]);
                        ++pairs;
                        const long long closed =
                            dist_complete(st.configs[a - 1], st.configs[b - 1]);
                        if (bfs_scope && closed != dist[b])
                            dist_ok = false;
                        if (supertoken_distance(kn, st.configs[a - 1], st.configs[b - 1])
                                .distance != closed)
                            match_ok = false;
                    }
                    if (bfs_scope && ecc_complete(st.configs[a - 1]) != ecc_bfs)
                        ecc_ok = false;
                    diam_bfs = std::max(diam_bfs, ecc_bfs);
                    rad_bfs = std::min(rad_bfs, ecc_bfs);
                }
                if (bfs_scope && diam_complete(n, k) != diam_bfs)
                    diam_ok = false;
                if (bfs_scope && rad_complete(n, k) != rad_bfs)
                    rad_ok = false;
                const long long printed = n - n / k;
                if (printed != rad_complete(n, k))
                    printed_radius_mismatch.emplace_back(
                        "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                        std::to_string(printed) + " vs " + std::to_string(rad_complete(n, k)));
            }
        }
        s.check("half sum-of-differences distance equals BFS",
                "complete bases, n <= 4, k <= 4, all pairs", dist_ok);
        s.check("eccentricity k - min(x_i) equals BFS", "complete bases, n <= 4, k <= 4",
                ecc_ok);
        s.check("diameter k equals BFS", "complete bases, n <= 4, k <= 4", diam_ok);
        s.check("radius k - floor(k/n) equals BFS", "complete bases, n <= 4, k <= 4", rad_ok);
        s.check("matching-based distance equals the closed form",
                "complete bases, n <= 5, k <= 4, " + std::to_string(pairs) + " pairs",
                match_ok);
        std::string detail;
        for (const auto& [inst, vals] : printed_radius_mismatch)
            detail += (detail.empty() ? "" : "; ") + inst + ": " + vals;
        s.against_published("published radius form n - floor(n/k)",
                            "complete bases, n <= 5, k <= 4",
                            printed_radius_mismatch.empty(), detail);
    }

    {
        const TokenConfig x({2, 0, 3}), y({1, 4, 0});
        const TokenConfig e({1, 2, 2});
        const TokenConfig a({5, 0, 0}), b({0, 4, 1});
        const bool ok = dist_complete(x, y) == 4 && ecc_complete(e) == 4 &&
                        diam_complete(3, 5) == 5 && rad_complete(3, 5) == 4 &&
                        dist_complete(a, b) == 5;
        s.check("frozen worked values",
                "n=3, k=5: dist(203,140)=4, ecc(122)=4, diam=5, rad=4, dist(500,041)=5", ok);
        s.against_published("published radius form on the worked instance", "n=3, k=5",
                            3 - 3 / 5 == rad_complete(3, 5),
                            "published 3 - floor(3/5) = 3, computed 4 (explicit BFS agrees "
                            "with 4)");
    }

    {
        // metric axioms of the closed-form distance
        const auto configs = enumerate_configs(4, 3);
        bool ok = true;
        for (const auto& x : configs)
            for (const auto& y : configs) {
                if (dist_complete(x, y) != dist_complete(y, x))
                    ok = false;
                if ((dist_complete(x, y) == 0) != (x == y))
                    ok = false;
                for (const auto& z : configs)
                    if (dist_complete(x, y) + dist_complete(y, z) < dist_complete(x, z))
                        ok = false;
            }
        s.check("closed-form distance satisfies the metric axioms",
                "n=4, k=3, all 8000 triples", ok);
    }

    return s.take();
}

// ----------------------------------------------------------------- general

std::vector<CheckRecord> run_general() {
    Suite s("general");

    {
        bool dist_ok = true, replay_ok_all = true, diam_ok = true, rad_ok = true;
        std::string bad_dist, bad_replay, bad_diam, bad_rad;
        int graphs = 0;
        long long checked_pairs = 0;
        for (int n = 1; n <= 5; ++n) {
            for (const Graph& g : all_connected_graphs(n)) {
                ++graphs;
                const int base_diam = diameter(g);
                const int base_rad = radius(g);
                for (int k = 1; k <= 3; ++k) {
                    const auto st = build_supertoken(g, k);
                    const int v = st.graph.order();
                    int diam_bfs = 0, rad_bfs = v;
                    for (int a = 1; a <= v; ++a) {
                        const auto dist = bfs_distances(st.graph, a);
                        int ecc_bfs = 0;
                        for (int b = 1; b <= v; ++b) {
                            ecc_bfs = std::max(ecc_bfs, dist[b]);
                            ++checked_pairs;
                            const auto r =
                                supertoken_distance(g, st.configs[a - 1], st.configs[b - 1]);
                            const auto describe = [&] {
                                return "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                       " configs " + st.configs[a - 1].label() + "," +
                                       st.configs[b - 1].label();
                            };
                            if (r.distance != dist[b] && dist_ok) {
                                dist_ok = false;
                                bad_dist = describe();
                            }
                            if (!replay_ok(g, st.configs[a - 1], st.configs[b - 1], r) &&
                                replay_ok_all) {
                                replay_ok_all = false;
                                bad_replay = describe();
                            }
                        }
                        diam_bfs = std::max(diam_bfs, ecc_bfs);
                        rad_bfs = std::min(rad_bfs, ecc_bfs);
                    }
                    if (diam_bfs != static_cast<long long>(k) * base_diam && diam_ok) {
                        diam_ok = false;
                        bad_diam = "graph " + std::to_string(graphs) + " k=" + std::to_string(k);
                    }
                    if (rad_bfs > static_cast<long long>(k) * base_rad && rad_ok) {
                        rad_ok = false;
                        bad_rad = "graph " + std::to_string(graphs) + " k=" + std::to_string(k);
                    }
                }
            }
        }
        const std::string scope = "all " + std::to_string(graphs) +
                                  " connected graphs on n <= 5 vertices, k <= 3, " +
                                  std::to_string(checked_pairs) + " ordered pairs";
        s.check("matching-based distance equals explicit BFS", scope, dist_ok, bad_dist);
        s.check("move witness replays to a shortest walk", scope, replay_ok_all, bad_replay);
        s.check("diameter equals k times the base diameter", scope, diam_ok, bad_diam);
        s.check("radius is at most k times the base radius", scope, rad_ok, bad_rad);
    }

    {
        // frozen worked instance on C_6 with 9 tokens
        const Graph c6 = Graph::cycle(6);
        const TokenConfig x({3, 1, 0, 2, 1, 2}), y({2, 0, 1, 1, 3, 2});
        const auto inst = build_matching_instance(x, y);
        const bool inst_ok = inst.surplus == std::vector<int>{1, 2, 4} &&
                             inst.deficit == std::vector<int>{3, 5, 5};
        const DistanceMatrix d(c6);
        std::vector<std::vector<long long>> cost(3, std::vector<long long>(3));
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col)
                cost[r][col] = d.at(inst.surplus[r], inst.deficit[col]);
        const bool cost_ok = cost == std::vector<std::vector<long long>>{
                                         {2, 2, 2}, {1, 3, 3}, {1, 1, 1}};
        const auto solved = solve_assignment(CostMatrix(cost));
        const auto full = supertoken_distance(c6, x, y);
        s.check("worked instance: surplus/deficit, cost matrix, optimal weight",
                "C_6, k=9, 310212 -> 201132",
                inst_ok && cost_ok && solved.total_weight == 4 && full.distance == 4 &&
                    replay_ok(c6, x, y, full),
                "weight " + std::to_string(solved.total_weight));
    }

    {
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= 6 && ok; ++n)
            for (int k = 0; k <= 5 && ok; ++k) {
                const auto configs = enumerate_configs(n, k);
                if (to_bigint(static_cast<long long>(configs.size())) != supertoken_order(n, k)) {
                    ok = false;
                    bad = "count n=" + std::to_string(n) + ",k=" + std::to_string(k);
                }
                for (size_t i = 0; i < configs.size(); ++i)
                    if (config_index(configs[i]) != static_cast<long long>(i) + 1) {
                        ok = false;
                        bad = "rank of " + configs[i].label();
                        break;
                    }
                for (size_t i = 1; i < configs.size(); ++i)
                    if (!(configs[i] < configs[i - 1])) {
                        ok = false;
                        bad = "order at " + configs[i].label();
                        break;
                    }
            }
        s.check("config enumeration is descending-lex and ranks round-trip",
                "n <= 6, k <= 5", ok, bad);
    }

    {
        // two tokens on a path: same graph as distinct tokens on a path one
        // vertex longer, matched by (i,j) -> {i, j+1}
        bool ok = true;
        for (int n = 2; n <= 8; ++n) {
            const auto st = build_supertoken(Graph::path(n), 2);
            const auto tg = build_token_graph(Graph::path(n + 1), 2);
            std::vector<int> map(st.graph.order() + 1, 0);
            for (int a = 1; a <= st.graph.order(); ++a) {
                const auto& counts = st.configs[a - 1].counts();
                int lo = 0, hi = 0;
                for (int v = 1; v <= n; ++v)
                    for (int t = 0; t < counts[v - 1]; ++t) {
                        if (!lo)
                            lo = v;
                        else
                            hi = v;
                    }
                const std::vector<int> subset{lo, hi + 1};
                const auto it =
                    std::lower_bound(tg.subsets.begin(), tg.subsets.end(), subset);
                map[a] = static_cast<int>(it - tg.subsets.begin()) + 1;
            }
            if (!is_edge_preserving_bijection(st.graph, tg.graph, map))
                ok = false;
        }
        s.check("two tokens on P_n match distinct tokens on P_{n+1} edge-exactly",
                "(i,j) -> {i, j+1}, n in [2,8]", ok);
    }

    {
        const auto tg = build_token_graph(Graph::complete(5), 2);
        bool ok = tg.graph.order() == 10;
        for (int v = 1; v <= tg.graph.order(); ++v)
            ok = ok && static_cast<int>(tg.graph.neighbors(v).size()) == 6;
        ok = ok && diameter(tg.graph) == 2;
        // one distinguishable token just walks the base graph
        const auto one = build_token_graph(Graph::cycle(5), 1);
        std::vector<int> ident(6);
        for (int v = 1; v <= 5; ++v)
            ident[v] = v;
        ok = ok && is_edge_preserving_bijection(one.graph, Graph::cycle(5), ident);
        s.check("distinct-token graphs: K_5 choose 2 is 6-regular of diameter 2; "
                "one token walks the base",
                "K_5 k=2, C_5 k=1", ok);
    }

    {
        bool ok = true;
        const auto w1 = antipodal_witnesses(Graph::cycle(6), 2, {1, 4});
        ok = ok && supertoken_distance(Graph::cycle(6), w1[0], w1[1]).distance == 6;
        const auto w2 = antipodal_witnesses(Graph::complete(2), 3, {1, 2});
        ok = ok && supertoken_distance(Graph::complete(2), w2[0], w2[1]).distance == 3;
        const auto w3 = antipodal_witnesses(Graph::cycle(4), 2, {1, 3});
        ok = ok && supertoken_distance(Graph::cycle(4), w3[0], w3[1]).distance == 4;
        bool rejected = false;
        try {
            antipodal_witnesses(Graph::cycle(6), 2, {1, 3});
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        s.check("all-tokens-on-one-vertex configs over antipodal vertices sit at "
                "distance k times the diameter",
                "(C_6,k=2,{1,4}), (K_2,k=3), (C_4,k=2); non-antipodal rejected",
                ok && rejected);
    }

    {
        std::mt19937 rng(987654u);
        std::uniform_int_distribution<int> size(1, 6), entry(0, 12);
        bool ok = true;
        for (int trial = 0; trial < 300 && ok; ++trial) {
            const int m = size(rng);
            std::vector<std::vector<long long>> rows(m, std::vector<long long>(m));
            for (auto& row : rows)
                for (auto& x : row)
                    x = entry(rng);
            const CostMatrix cm(rows);
            const auto fast = solve_assignment(cm);
            const auto slow = brute_force_assignment(cm);
            ok = fast.total_weight == slow.total_weight && fast.row_to_col == slow.row_to_col;
        }
        s.check("assignment solver agrees with exhaustive search, including the "
                "lexicographic tie-break",
                "300 random cost matrices, size <= 6, entries <= 12", ok);
    }

    return s.take();
}

// --------------------------------------------------------------- dimbounds

std::vector<CheckRecord> run_dimbounds() {
    Suite s("dimbounds");

    {
        // the three published 5x5 position products for two tokens on C_5
        const DistanceMatrix d(Graph::cycle(5));
        const std::vector<std::vector<int>> pattern0 = {
            {2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}};
        const std::vector<std::vector<int>> pattern1 = {
            {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 0, 0, 1}};
        const std::vector<std::vector<int>> pattern2 = {
            {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}};
        const std::vector<std::vector<long long>> product0 = {{0, 2, 4, 4, 2},
                                                              {2, 0, 2, 4, 4},
                                                              {4, 2, 0, 2, 4},
                                                              {4, 4, 2, 0, 2},
                                                              {2, 4, 4, 2, 0}};
        const std::vector<std::vector<long long>> product1 = {{1, 1, 3, 4, 3},
                                                              {3, 1, 1, 3, 4},
                                                              {4, 3, 1, 1, 3},
                                                              {3, 4, 3, 1, 1},
                                                              {1, 3, 4, 3, 1}};
        const std::vector<std::vector<long long>> product2 = {{2, 2, 2, 3, 3},
                                                              {3, 2, 2, 2, 3},
                                                              {3, 3, 2, 2, 2},
                                                              {2, 3, 3, 2, 2},
                                                              {2, 2, 3, 3, 2}};
        bool ok = true;
        const auto check_block = [&](const std::vector<std::vector<int>>& rows,
                                     const std::vector<std::vector<long long>>& expect) {
            for (size_t r = 0; r < rows.size(); ++r)
                if (position_via_matrix(TokenConfig(rows[r]), d) != expect[r])
                    ok = false;
        };
        check_block(pattern0, product0);
        check_block(pattern1, product1);
        check_block(pattern2, product2);
        s.check("position products reproduce the three published 5x5 matrices row for row",
                "two tokens on C_5, 15 configs", ok);
    }

    {
        const auto report = verify_supertoken_dim_bound(Graph::cycle(5), 2);
        const bool ok = !report.distance_matrix_singular && report.canonical_resolves &&
                        report.degree_regular && report.reduced_resolves &&
                        report.position_sums_constant && report.expected_position_sum == 12;
        s.check("canonical landmarks resolve two tokens on C_5; sums constant at 12",
                "C_5, k=2", ok);
    }

    {
        // dropping any single canonical landmark must still resolve
        const auto st = build_supertoken(Graph::cycle(5), 2);
        bool ok = true;
        for (int drop = 1; drop <= 5; ++drop) {
            LandmarkSet c;
            for (int v = 1; v <= 5; ++v)
                if (v != drop)
                    c.push_back(static_cast<int>(
                        config_index(TokenConfig::all_on(5, 2, v))));
            std::sort(c.begin(), c.end());
            ok = ok && is_resolving(st.graph, c);
        }
        s.check("any four canonical landmarks resolve two tokens on C_5",
                "5 drop-one subsets", ok);
    }

    {
        const auto report = verify_supertoken_dim_bound(Graph::cycle(6), 2);
        bool ok = report.distance_matrix_singular && !report.canonical_resolves &&
                  report.collisions.size() == 1;
        if (ok) {
            auto group = report.collisions.front();
            std::sort(group.begin(), group.end());
            std::vector<TokenConfig> expect{TokenConfig({0, 0, 1, 0, 0, 1}),
                                            TokenConfig({0, 1, 0, 0, 1, 0}),
                                            TokenConfig({1, 0, 0, 1, 0, 0})};
            ok = group == expect;
            const auto pos = position_via_matrix(expect.front(), DistanceMatrix(Graph::cycle(6)));
            ok = ok && pos == PositionVector{3, 3, 3, 3, 3, 3};
        }
        s.check("singular base: exactly the three alternating configs collide at "
                "(3,3,3,3,3,3)",
                "C_6, k=2", ok);
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k) {
                const Graph kn = Graph::complete(n);
                const auto report = verify_supertoken_dim_bound(kn, k);
                ok = ok && report.canonical_resolves && report.degree_regular &&
                     report.reduced_resolves && report.position_sums_constant &&
                     report.expected_position_sum == static_cast<long long>(n - 1) * k;
                const auto st = build_supertoken(kn, k);
                const auto dim = metric_dimension(st.graph, -1, 40);
                if (!dim.exact || dim.dimension != n - 1) {
                    ok = false;
                    detail = "dimension " + std::to_string(dim.dimension) + " at n=" +
                             std::to_string(n) + ",k=" + std::to_string(k);
                }
            }
        s.check("complete bases: n-1 canonical landmarks resolve, position sums are "
                "(n-1)k, exhaustive dimension is n-1",
                "n <= 4, k <= 4", ok, detail);
    }

    {
        const auto dim = metric_dimension(Graph::cycle(5));
        const bool computed_ok = dim.exact && dim.dimension == 2 &&
                                 dim.witness == LandmarkSet{1, 2};
        s.check("exhaustive dimension of C_5", "witness {1,2}", computed_ok,
                "computed " + std::to_string(dim.dimension));
        s.against_published("published dimension 3 for C_5", "C_5",
                            dim.dimension == 3,
                            "computed 2 (standard value for cycles); witness {1,2}");
    }

    {
        const auto st = build_supertoken(Graph::cycle(5), 2);
        const auto dim = metric_dimension(st.graph, -1, 15);
        const bool computed_ok = dim.exact && dim.dimension == 3 &&
                                 dim.witness == LandmarkSet{1, 2, 15};
        s.check("exhaustive dimension of two tokens on C_5",
                "15 vertices, witness configs 20000, 11000, 00002", computed_ok,
                "computed " + std::to_string(dim.dimension));
        s.against_published("published dimension 4 for two tokens on C_5", "C_5, k=2",
                            dim.dimension == 4,
                            "computed 3: {20000, 11000, 00002} resolves and no pair does");
    }

    {
        bool ok = true;
        std::string bad;
        for (int n = 3; n <= 6 && ok; ++n) {
            for (int k = 1; k <= 200 && ok; ++k) {
                const bool holds = check_inequality_kn(n, k);
                bool expect = true;
                if (n == 5)
                    expect = !(k >= 5 && k <= 10);
                if (n == 6)
                    expect = !(k >= 3 && k <= 104);
                if (holds != expect) {
                    ok = false;
                    bad = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
                }
            }
        }
        s.check("k^(n-2) + n - 2 stays below the config count exactly off the "
                "published failure ranges",
                "n in [3,6], k in [1,200]; failures k in [5,10] at n=5, k in [3,104] at n=6",
                ok, bad);
    }

    {
        // resolving sets stay resolving under supersets
        bool ok = true;
        for (const auto& g : {Graph::cycle(5), Graph::cycle(6), Graph::path(6)}) {
            const auto dim = metric_dimension(g);
            for (int extra = 1; extra <= g.order(); ++extra) {
                LandmarkSet c = dim.witness;
                if (std::find(c.begin(), c.end(), extra) != c.end())
                    continue;
                c.push_back(extra);
                std::sort(c.begin(), c.end());
                ok = ok && is_resolving(g, c);
            }
        }
        s.check("supersets of a resolving set still resolve", "C_5, C_6, P_6", ok);
    }

    return s.take();
}

// -------------------------------------------------------------- feasibility

std::vector<CheckRecord> run_feasibility() {
    Suite s("feasibility");

    {
        const Graph k3 = Graph::complete(3);
        const auto good = feasibility({2, 4, 4}, k3, 5);
        const auto bad = feasibility({1, 3, 3}, k3, 5);
        const bool ok = good.feasible && good.config &&
                        good.config->counts() == std::vector<int>{3, 1, 1} &&
                        !bad.feasible && bad.solution.size() == 3 &&
                        bad.solution[0] == BigRat(5, 2) && bad.solution[1] == BigRat(1, 2) &&
                        bad.solution[2] == BigRat(1, 2);
        s.check("frozen worked instances over K_3 with five tokens",
                "(2,4,4) -> config 311; (1,3,3) -> infeasible at (5/2,1/2,1/2)", ok);
    }

    {
        bool ok = true;
        int graphs = 0, skipped_singular = 0;
        long long configs_checked = 0;
        std::string bad;
        for (int n = 2; n <= 4; ++n)
            for (const Graph& g : all_connected_graphs(n)) {
                if (determinant(distance_matrix(g)) == 0) {
                    ++skipped_singular;
                    continue;
                }
                ++graphs;
                const DistanceMatrix d(g);
                for (int k = 1; k <= 4; ++k)
                    for (const auto& x : enumerate_configs(n, k)) {
                        ++configs_checked;
                        const auto r = feasibility(position_via_matrix(x, d), g, k);
                        if (!r.feasible || !r.config || !(*r.config == x)) {
                            ok = false;
                            if (bad.empty())
                                bad = "config " + x.label();
                        }
                    }
            }
        s.check("positions of genuine configs round-trip to the same config",
                "connected bases n <= 4 with invertible distance matrix (" +
                    std::to_string(graphs) + " graphs, " + std::to_string(skipped_singular) +
                    " singular skipped), k <= 4, " + std::to_string(configs_checked) +
                    " configs",
                ok, bad);
    }

    {
        bool thrown4 = false, thrown6 = false;
        try {
            feasibility({1, 1, 1, 1}, Graph::cycle(4), 2);
        } catch (const SingularMatrixError&) {
            thrown4 = true;
        }
        try {
            feasibility({3, 3, 3, 3, 3, 3}, Graph::cycle(6), 2);
        } catch (const SingularMatrixError&) {
            thrown6 = true;
        }
        s.check("singular distance matrices are reported as such", "C_4 and C_6",
                thrown4 && thrown6);
    }

    {
        bool ok = true;
        for (int n = 2; n <= 8; ++n) {
            const auto inv = inverse_complete_distance(n);
            const auto direct = invert_exact(to_rational(DistanceMatrix(Graph::complete(n))));
            ok = ok && inv == direct;
            // multiply against D to double-check the closed form
            const DistanceMatrix d(Graph::complete(n));
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    BigRat sum = 0;
                    for (int t = 0; t < n; ++t)
                        sum += BigRat(d.at(i + 1, t + 1)) * inv[t][j];
                    ok = sum == (i == j ? 1 : 0);
                }
        }
        s.check("closed-form inverse for complete bases matches elimination and "
                "multiplies to the identity",
                "K_2 .. K_8", ok);
    }

    {
        bool ok = true;
        std::string bad;
        long long checked = 0;
        for (int n = 2; n <= 4; ++n)
            for (const Graph& g : all_connected_graphs(n)) {
                const DistanceMatrix d(g);
                for (int k = 1; k <= 3; ++k)
                    for (const auto& x : enumerate_configs(n, k)) {
                        const auto pos = position_via_matrix(x, d);
                        for (int v = 1; v <= n; ++v) {
                            ++checked;
                            const auto direct = supertoken_distance(
                                g, x, TokenConfig::all_on(n, k, v));
                            if (direct.distance != pos[v - 1]) {
                                ok = false;
                                if (bad.empty())
                                    bad = "config " + x.label() + " landmark " +
                                          std::to_string(v);
                            }
                        }
                    }
            }
        s.check("matrix positions equal genuine distances to the canonical landmarks",
                "connected bases n <= 4, k <= 3, " + std::to_string(checked) + " entries",
                ok, bad);
    }

    return s.take();
}

} // namespace

std::vector<std::string> suite_names() {
    return {"theorem1", "gdc", "complete", "general", "dimbounds", "feasibility"};
}

std::vector<CheckRecord> run_suite(const std::string& name) {
    if (name == "theorem1")
        return run_theorem1();
    if (name == "gdc")
        return run_gdc();
    if (name == "complete")
        return run_complete();
    if (name == "general")
        return run_general();
    if (name == "dimbounds")
        return run_dimbounds();
    if (name == "feasibility")
        return run_feasibility();
    if (name == "all") {
        std::vector<CheckRecord> out;
        for (const auto& suite : suite_names()) {
            auto part = run_suite(suite);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace stg::verify
