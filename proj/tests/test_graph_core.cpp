#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "psw/generators.hpp"
#include "psw/graph.hpp"
#include "psw/rng.hpp"

using namespace psw;

TEST_CASE("build_graph canonicalizes and validates") {
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.n == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.has_edge(2, 0));

    Graph single = build_graph(1, {});
    CHECK(single.n == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_WITH_AS(build_graph(4, {{0, 0}}), doctest::Contains("self-loop"), Error);
    CHECK_THROWS_WITH_AS(build_graph(4, {{0, 1}, {1, 0}}), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(build_graph(2, {{0, 5}}), doctest::Contains("out of range"), Error);
}

TEST_CASE("components_avoiding splits at cut vertices") {
    Graph p3 = path_graph(3);
    auto comps = components_avoiding(p3, {1});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0});
    CHECK(comps[1] == VertexSet{2});

    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    comps = components_avoiding(tri, {});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet{0, 1, 2});
}

TEST_CASE("components_avoiding on the 7-vertex family member") {
    GhGraph g2 = build_gh(2);
    auto comps = components_avoiding(g2.graph, {1, 2});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0});
    CHECK(comps[1] == VertexSet{3, 4, 5, 6}); // leaves joined by the level path
}

TEST_CASE("diameter_of_subset") {
    Graph p4 = path_graph(4);
    CHECK(diameter_of_subset(p4, {2}) == 0);
    CHECK(diameter_of_subset(p4, {0, 3}) == 3);
    CHECK_THROWS_AS(diameter_of_subset(p4, {}), Error);

    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(!diameter_of_subset(two, {0, 2}).has_value());
}

TEST_CASE("diameter of subsets of G_h stays below 2h") {
    Rng rng(11);
    for (int h = 1; h <= 4; ++h) {
        GhGraph gh = build_gh(h);
        // brute all-pairs distances as the oracle
        std::vector<std::vector<long long>> dist;
        for (int v = 0; v < gh.graph.n; ++v) dist.push_back(bfs_distances(gh.graph, v));
        for (int rep = 0; rep < 20; ++rep) {
            int k = static_cast<int>(rand_int(rng, 1, std::min(6, gh.graph.n)));
            VertexSet r = rand_subset(rng, gh.graph.n, k);
            long long expect = 0;
            for (int u : r)
                for (int v : r) expect = std::max(expect, dist[u][v]);
            auto got = diameter_of_subset(gh.graph, r);
            REQUIRE(got.has_value());
            CHECK(*got == expect);
            CHECK(*got <= 2 * h);
        }
    }
}

TEST_CASE("component outputs are mutually non-adjacent") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        int n = static_cast<int>(rand_int(rng, 2, 12));
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rand_int(rng, 0, 99) < 30) es.emplace_back(i, j);
        Graph g = build_graph(n, std::move(es));
        VertexSet removed = rand_subset(rng, n, static_cast<int>(rand_int(rng, 0, n / 2)));
        auto comps = components_avoiding(g, removed);
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = a + 1; b < comps.size(); ++b)
                for (int u : comps[a])
                    for (int v : comps[b]) CHECK(!g.has_edge(u, v));
    }
}

TEST_CASE("diameter is monotone under subset inclusion") {
    Rng rng(13);
    for (int rep = 0; rep < 40; ++rep) {
        int n = static_cast<int>(rand_int(rng, 3, 10));
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1); // keep it connected
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (rand_int(rng, 0, 99) < 20) es.emplace_back(i, j);
        Graph g = build_graph(n, std::move(es));
        VertexSet big = rand_subset(rng, n, static_cast<int>(rand_int(rng, 2, n)));
        VertexSet small(big.begin(), big.begin() + rand_int(rng, 1, big.size()));
        auto db = diameter_of_subset(g, big);
        auto ds = diameter_of_subset(g, small);
        REQUIRE(db.has_value());
        REQUIRE(ds.has_value());
        CHECK(*ds <= *db);
    }
}

TEST_CASE("distances obey the triangle inequality on components") {
    Rng rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        int n = static_cast<int>(rand_int(rng, 3, 9));
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (rand_int(rng, 0, 99) < 25) es.emplace_back(i, j);
        Graph g = build_graph(n, std::move(es));
        std::vector<std::vector<long long>> d;
        for (int v = 0; v < n; ++v) d.push_back(bfs_distances(g, v));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
    }
}

TEST_CASE("edge list io round trip") {
    GhGraph g3 = build_gh(3);
    std::stringstream ss;
    write_edge_list(g3.graph, ss);
    Graph back = read_edge_list(ss);
    CHECK(back.n == g3.graph.n);
    CHECK(back.edges == g3.graph.edges);

    std::stringstream bad("2 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(bad), Error); // requires u < v
}

TEST_CASE("induced subgraph keeps the id tables consistent") {
    Graph c5 = cycle_graph(5);
    auto ind = induced_subgraph(c5, {0, 1, 2, 4});
    CHECK(ind.graph.n == 4);
    for (auto& [u, v] : ind.graph.edges)
        CHECK(c5.has_edge(ind.to_old[u], ind.to_old[v]));
    CHECK(ind.to_new[3] == -1);
    CHECK(ind.to_old[ind.to_new[4]] == 4);
}
