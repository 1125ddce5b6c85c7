#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psw/binary_tree.hpp"
#include "psw/generators.hpp"
#include "psw/rng.hpp"

using namespace psw;

TEST_CASE("complete binary tree basics") {
    CompleteBinaryTree t0 = build_binary_tree(0);
    CHECK(t0.vertex_count() == 1);
    CHECK(tree_as_graph(t0).edge_count() == 0);

    CompleteBinaryTree t1 = build_binary_tree(1);
    CHECK(t1.vertex_count() == 3);
    Graph g1 = tree_as_graph(t1);
    CHECK(g1.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    CompleteBinaryTree t3 = build_binary_tree(3);
    CHECK(t3.vertex_count() == 15);
    for (int v = 7; v <= 14; ++v) CHECK(t3.is_leaf(v));
    CHECK(!t3.is_leaf(6));
    CHECK(t3.depth(5) == 2);
    CHECK(t3.height_of(5) == 1);
    CHECK(t3.parent(5) == 2);
    CHECK(t3.lca(7, 9) == 1);
    CHECK(t3.tree_distance(7, 9) == 4);

    CHECK_THROWS_WITH_AS(build_binary_tree(30), doctest::Contains("budget"), Error);
}

TEST_CASE("unrelated sets and leaf intervals") {
    CompleteBinaryTree t2 = build_binary_tree(2);
    CHECK(is_unrelated(t2, {3, 4, 5, 6}));
    CHECK(!is_unrelated(t2, {0, 5}));
    CHECK(is_unrelated(t2, {1, 6}));

    // interval oracle: pairwise ancestor climbs
    Rng rng(5);
    CompleteBinaryTree t5 = build_binary_tree(5);
    for (int rep = 0; rep < 200; ++rep) {
        int k = static_cast<int>(rand_int(rng, 1, 6));
        VertexSet b = rand_subset(rng, static_cast<int>(t5.vertex_count()), k);
        bool expect = true;
        for (int u : b)
            for (int v : b)
                if (u != v && t5.is_ancestor(u, v)) expect = false;
        CHECK(is_unrelated(t5, b) == expect);
    }
}

TEST_CASE("left to right order") {
    CompleteBinaryTree t2 = build_binary_tree(2);
    CHECK(left_to_right_order(t2, {3, 4, 5, 6}) == std::vector<int>{3, 4, 5, 6});
    CHECK(left_to_right_order(t2, {1, 5}) == std::vector<int>{1, 5});
    CHECK_THROWS_AS(left_to_right_order(t2, {0, 6}), Error);
}

TEST_CASE("the family member G_h") {
    GhGraph g1 = build_gh(1);
    CHECK(g1.graph.n == 3);
    CHECK(g1.graph.edge_count() == 3); // a triangle

    GhGraph g2 = build_gh(2);
    CHECK(g2.graph.n == 7);
    CHECK(g2.graph.edge_count() == 10);

    for (int h = 1; h <= 12; ++h) {
        GhGraph gh = build_gh(h);
        CHECK(gh.graph.n == (1LL << (h + 1)) - 1);
        CHECK(gh.graph.edge_count() == (1LL << (h + 2)) - h - 4);
        CHECK(gh.graph.max_degree() <= 5);
    }
}

TEST_CASE("degree profile of G_h") {
    for (int h = 2; h <= 8; ++h) {
        GhGraph gh = build_gh(h);
        const auto& t = gh.tree;
        CHECK(gh.graph.degree(0) == 2); // the root
        for (int v = 0; v < gh.graph.n; ++v) {
            int d = t.depth(v);
            long long pos = t.level_position(v);
            bool endpoint = pos == 0 || pos == t.level_size(d) - 1;
            int level_deg = 0, tree_deg = 0;
            for (int w : gh.graph.neighbors(v)) {
                if (t.depth(w) == d) ++level_deg;
                else ++tree_deg;
            }
            CHECK(level_deg <= 2);
            CHECK(tree_deg <= 3);
            if (d >= 1 && d < h && !endpoint) CHECK(gh.graph.degree(v) == 5);
            if (d >= 1 && endpoint) CHECK(gh.graph.degree(v) <= 4);
        }
    }
}

TEST_CASE("level paths agree with the left-to-right order") {
    for (int h = 1; h <= 6; ++h) {
        GhGraph gh = build_gh(h);
        for (int i = 1; i <= h; ++i) {
            auto [lo, hi] = gh.level_path(i);
            VertexSet level;
            for (int v = lo; v <= hi; ++v) level.push_back(v);
            auto order = left_to_right_order(gh.tree, level);
            CHECK(order == std::vector<int>(level.begin(), level.end()));
            for (int v = lo; v < hi; ++v) CHECK(gh.graph.has_edge(v, v + 1));
        }
    }
}

TEST_CASE("subdivided grids") {
    SubdividedGrid unit = build_subdivided_grid(2, 2, {0, 0});
    CHECK(unit.graph.n == 4);
    CHECK(unit.graph.edge_count() == 4); // the 4-cycle

    SubdividedGrid p3 = build_subdivided_grid(2, 1, {1});
    CHECK(p3.graph.n == 3);
    CHECK(p3.graph.edge_count() == 2);

    SubdividedGrid g32 = build_subdivided_grid(3, 2, {1, 1, 1, 1});
    CHECK(g32.graph.n == 10); // 6 grid + 4 subdivision
    CHECK(g32.graph.edge_count() == 11); // 3 vertical + 8 half-edges
    CHECK(contract_chains(g32).edges == plain_grid(3, 2).edges);
}

TEST_CASE("contracting random grids recovers the plain grid") {
    Rng rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        int x = static_cast<int>(rand_int(rng, 1, 5));
        int y = static_cast<int>(rand_int(rng, 1, 5));
        std::vector<int> div(static_cast<std::size_t>(std::max(0, x - 1)) * y);
        for (auto& d : div) d = static_cast<int>(rand_int(rng, 0, 3));
        SubdividedGrid sg = build_subdivided_grid(x, y, div);
        CHECK(contract_chains(sg).edges == plain_grid(x, y).edges);
        // chains really carry the declared lengths
        long long extra = 0;
        for (auto& ch : sg.chains) extra += static_cast<long long>(ch.size());
        CHECK(sg.graph.n == x * y + extra);
    }
}
