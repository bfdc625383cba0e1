#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "stg/graph.hpp"

using namespace stg;

TEST_CASE("constructor validates and normalizes") {
    Graph g(3, {{3, 1}, {1, 2}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    // edges are stored with i < j, sorted
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});

    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);       // loop
    CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), std::invalid_argument); // dup
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);       // range
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(4, {{1, 2}, {3, 4}}), std::invalid_argument); // disconnected
    CHECK_THROWS_AS(Graph(2, {}), std::invalid_argument);               // disconnected
}

TEST_CASE("neighbor lists are ascending") {
    Graph g(4, {{2, 1}, {4, 2}, {3, 2}});
    CHECK(g.neighbors(2) == std::vector<int>{1, 3, 4});
    CHECK(g.has_edge(2, 4));
    CHECK(g.has_edge(4, 2));
    CHECK_FALSE(g.has_edge(1, 4));
}

TEST_CASE("builtin families") {
    CHECK(Graph::complete(1).size() == 0);
    CHECK(Graph::complete(5).size() == 10);
    CHECK(Graph::cycle(6).size() == 6);
    CHECK(Graph::path(7).size() == 6);
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Graph::path(0), std::invalid_argument);
}

TEST_CASE("bfs distances and metric invariants") {
    Graph c6 = Graph::cycle(6);
    auto d = bfs_distances(c6, 1);
    CHECK(d == std::vector<int>{-1, 0, 1, 2, 3, 2, 1});

    CHECK(eccentricity(c6, 1) == 3);
    CHECK(diameter(c6) == 3);
    CHECK(radius(c6) == 3);

    Graph p4 = Graph::path(4);
    CHECK(diameter(p4) == 3);
    CHECK(radius(p4) == 2);
    CHECK(diameter(Graph::complete(5)) == 1);
    CHECK(diameter(Graph::complete(1)) == 0);

    DistanceMatrix m(c6);
    for (int u = 1; u <= 6; ++u) {
        CHECK(m.at(u, u) == 0);
        for (int v = 1; v <= 6; ++v)
            CHECK(m.at(u, v) == m.at(v, u));
    }
    CHECK(m.at(1, 4) == 3);
}

TEST_CASE("bounded extremes agree with the naive scans") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            Extremes e = extremal_distances(g);
            CHECK(e.diameter == diameter(g));
            CHECK(e.radius == radius(g));
            CHECK(bounded_radius(g) == radius(g));
        }
    }
    // a couple of bigger shapes
    for (const Graph& g : {Graph::cycle(30), Graph::path(41), Graph::complete(12)}) {
        Extremes e = extremal_distances(g);
        CHECK(e.diameter == diameter(g));
        CHECK(e.radius == radius(g));
        CHECK(bounded_radius(g) == radius(g));
    }
}

TEST_CASE("distance degree sequence") {
    auto c5 = distance_degree_sequence(Graph::cycle(5));
    REQUIRE(c5.has_value());
    CHECK(c5->counts == std::vector<int>{1, 2, 2});
    CHECK(c5->max_distance() == 2);
    CHECK(row_sum(*c5) == 0 * 1 + 1 * 2 + 2 * 2);

    CHECK_FALSE(distance_degree_sequence(Graph::path(3)).has_value());
    auto k4 = distance_degree_sequence(Graph::complete(4));
    REQUIRE(k4.has_value());
    CHECK(k4->counts == std::vector<int>{1, 3});
}

TEST_CASE("edge preserving bijection check") {
    Graph c4 = Graph::cycle(4);
    // rotation is an isomorphism of C_4 (entry 0 of the map is unused)
    CHECK(is_edge_preserving_bijection(c4, c4, {0, 2, 3, 4, 1}));
    // swapping an end of P_3 with the middle is not
    Graph p3 = Graph::path(3);
    CHECK_FALSE(is_edge_preserving_bijection(p3, p3, {0, 2, 1, 3}));
    // map to a graph of different size is rejected
    CHECK_FALSE(is_edge_preserving_bijection(p3, c4, {0, 1, 2, 3}));
    // non-bijections are rejected
    CHECK_FALSE(is_edge_preserving_bijection(p3, p3, {0, 1, 1, 3}));
}

TEST_CASE("connected graph enumeration counts") {
    // number of connected graphs on n labeled vertices
    CHECK(all_connected_graphs(1).size() == 1);
    CHECK(all_connected_graphs(2).size() == 1);
    CHECK(all_connected_graphs(3).size() == 4);
    CHECK(all_connected_graphs(4).size() == 38);
    CHECK(all_connected_graphs(5).size() == 728);
}

TEST_CASE("random trees are trees and deterministic per seed") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 8;
        Graph t = random_tree(n, rng); // constructor would reject a disconnected graph
        CHECK(t.order() == n);
        CHECK(t.size() == n - 1);
    }
    std::mt19937 a(7), b(7);
    CHECK(random_tree(9, a).edges() == random_tree(9, b).edges());
}

TEST_CASE("graph text round-trip") {
    Graph g = Graph::cycle(5);
    std::ostringstream out;
    write_graph(out, g);
    CHECK(out.str() == "5 5\n1 2\n1 5\n2 3\n3 4\n4 5\n");

    std::istringstream in(out.str());
    Graph back = read_graph(in);
    CHECK(back.edges() == g.edges());

    // '#' comments are dropped anywhere
    std::istringstream annotated("3 2 # header\n# full line\n1 2\n2 3 # tail\n");
    CHECK(read_graph(annotated).size() == 2);

    std::istringstream bad1("oops");
    CHECK_THROWS_AS(read_graph(bad1), std::invalid_argument);
    std::istringstream bad2("2 1\n1 2\nextra");
    CHECK_THROWS_AS(read_graph(bad2), std::invalid_argument);
    std::istringstream bad3("2 2\n1 2\n");
    CHECK_THROWS_AS(read_graph(bad3), std::invalid_argument);
}

TEST_CASE("label sidecar format") {
    std::ostringstream out;
    write_labels(out, {"20", "11", "02"});
    CHECK(out.str() == "1 20\n2 11\n3 02\n");
}
