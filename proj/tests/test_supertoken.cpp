#include <stdexcept>

#include "doctest.h"
#include "stg/errors.hpp"
#include "stg/supertoken.hpp"

using namespace stg;

TEST_CASE("token config basics") {
    TokenConfig c({3, 1, 0, 2, 1, 2});
    CHECK(c.vertex_count() == 6);
    CHECK(c.token_total() == 9);
    CHECK(c.at(1) == 3);
    CHECK(c.at(3) == 0);
    CHECK(c.label() == "310212");
    CHECK_THROWS_AS(TokenConfig({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(TokenConfig({}), std::invalid_argument);

    CHECK(TokenConfig::all_on(4, 3, 2).counts() == std::vector<int>{0, 3, 0, 0});

    // labels switch to comma form once the token count needs multiple digits
    TokenConfig big({10, 0, 2});
    CHECK(big.label() == "10,0,2");
}

TEST_CASE("config parsing") {
    CHECK(TokenConfig::parse("310212").counts() ==
          std::vector<int>{3, 1, 0, 2, 1, 2});
    CHECK(TokenConfig::parse("10,0,2").counts() == std::vector<int>{10, 0, 2});
    CHECK_THROWS_AS(TokenConfig::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(TokenConfig::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(TokenConfig::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(TokenConfig::parse("12a"), std::invalid_argument);
}

TEST_CASE("config enumeration and ranking") {
    CHECK(supertoken_order(3, 5) == 21);
    CHECK(supertoken_order(6, 9) == 2002);
    CHECK(supertoken_order(10, 10) == 92378);

    auto configs = enumerate_configs(3, 2);
    REQUIRE(configs.size() == 6);
    CHECK(configs[0].counts() == std::vector<int>{2, 0, 0});
    CHECK(configs[1].counts() == std::vector<int>{1, 1, 0});
    CHECK(configs[2].counts() == std::vector<int>{1, 0, 1});
    CHECK(configs[3].counts() == std::vector<int>{0, 2, 0});
    CHECK(configs[4].counts() == std::vector<int>{0, 1, 1});
    CHECK(configs[5].counts() == std::vector<int>{0, 0, 2});

    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            auto all = enumerate_configs(n, k);
            for (size_t i = 0; i < all.size(); ++i)
                CHECK(config_index(all[i]) == static_cast<long long>(i) + 1);
        }
}

TEST_CASE("explicit construction") {
    SupertokenGraph st = build_supertoken(Graph::cycle(5), 2);
    CHECK(st.graph.order() == 15);
    CHECK(st.graph.size() == 25);
    // moving one of the two tokens at vertex 1 along edge {1,2}:
    // 20000 and 11000 are the first two configs
    CHECK(st.configs[0].label() == "20000");
    CHECK(st.configs[1].label() == "11000");
    CHECK(st.graph.has_edge(1, 2));

    // two tokens on an edge give a path through the mixed config
    SupertokenGraph p = build_supertoken(Graph::complete(2), 2);
    CHECK(p.graph.order() == 3);
    CHECK(p.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    CHECK_THROWS_AS(build_supertoken(Graph::cycle(5), 2, 10), SizeCapError);
}

TEST_CASE("distinct-token construction") {
    TokenGraph tg = build_token_graph(Graph::path(3), 2);
    REQUIRE(tg.graph.order() == 3);
    CHECK(tg.subsets[0] == std::vector<int>{1, 2});
    CHECK(tg.subsets[1] == std::vector<int>{1, 3});
    CHECK(tg.subsets[2] == std::vector<int>{2, 3});
    // {1,2} ~ {1,3} via edge {2,3}; {1,3} ~ {2,3} via edge {1,2}
    CHECK(tg.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    CHECK(build_token_graph(Graph::complete(5), 2).graph.size() == 30);
    CHECK_THROWS_AS(build_token_graph(Graph::path(3), 5), std::invalid_argument);
}

TEST_CASE("surplus and deficit extraction") {
    MatchingInstance mi = build_matching_instance(TokenConfig({3, 1, 0, 2, 1, 2}),
                                                  TokenConfig({2, 0, 1, 1, 3, 2}));
    CHECK(mi.surplus == std::vector<int>{1, 2, 4});
    CHECK(mi.deficit == std::vector<int>{3, 5, 5});
    CHECK(mi.size() == 3);

    MatchingInstance empty = build_matching_instance(TokenConfig({1, 1}),
                                                     TokenConfig({1, 1}));
    CHECK(empty.size() == 0);
}

TEST_CASE("matching-based distance on worked instances") {
    Graph c6 = Graph::cycle(6);
    SupertokenDistance r = supertoken_distance(c6, TokenConfig::parse("310212"),
                                               TokenConfig::parse("201132"));
    CHECK(r.distance == 4);
    REQUIRE(r.moves.size() == 4);

    // replay the witness
    std::vector<int> counts = TokenConfig::parse("310212").counts();
    for (const auto& m : r.moves) {
        CHECK(c6.has_edge(m.from, m.to));
        REQUIRE(counts[m.from - 1] > 0);
        --counts[m.from - 1];
        ++counts[m.to - 1];
    }
    CHECK(counts == TokenConfig::parse("201132").counts());

    CHECK(supertoken_distance(Graph::complete(3), TokenConfig::parse("203"),
                              TokenConfig::parse("140"))
              .distance == 4);

    SupertokenDistance same =
        supertoken_distance(c6, TokenConfig::parse("111111"), TokenConfig::parse("111111"));
    CHECK(same.distance == 0);
    CHECK(same.moves.empty());

    CHECK_THROWS_AS(supertoken_distance(c6, TokenConfig::parse("11"),
                                        TokenConfig::parse("101010")),
                    std::invalid_argument);
    CHECK_THROWS_AS(supertoken_distance(c6, TokenConfig::parse("210000"),
                                        TokenConfig::parse("101011")),
                    std::invalid_argument);
}

TEST_CASE("complete-base closed forms") {
    CHECK(dist_complete(TokenConfig::parse("203"), TokenConfig::parse("140")) == 4);
    CHECK(dist_complete(TokenConfig::parse("500"), TokenConfig::parse("041")) == 5);
    CHECK(ecc_complete(TokenConfig::parse("122")) == 4);
    CHECK(diam_complete(3, 5) == 5);
    CHECK(rad_complete(3, 5) == 4);
    CHECK(rad_complete(10, 10) == 9);
    CHECK(rad_complete(3, 6) == 4);

    // closed forms agree with explicit BFS on a small instance
    Graph k3 = Graph::complete(3);
    for (int k = 1; k <= 3; ++k) {
        CHECK(supertoken_diameter(k3, k) == diam_complete(3, k));
        CHECK(supertoken_radius(k3, k) == rad_complete(3, k));
        for (const auto& c : enumerate_configs(3, k))
            CHECK(supertoken_eccentricity(k3, k, c) == ecc_complete(c));
    }
}

TEST_CASE("antipodal witnesses") {
    auto w = antipodal_witnesses(Graph::cycle(6), 2, {1, 4});
    REQUIRE(w.size() == 2);
    CHECK(w[0].label() == "200000");
    CHECK(w[1].label() == "000200");
    CHECK(supertoken_distance(Graph::cycle(6), w[0], w[1]).distance == 6);

    // vertices not pairwise at diameter distance are rejected
    CHECK_THROWS_AS(antipodal_witnesses(Graph::cycle(6), 2, {1, 3}),
                    std::invalid_argument);
}
