#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "psw/constructions.hpp"
#include "psw/generators.hpp"
#include "psw/oracle.hpp"
#include "psw/partitions.hpp"
#include "psw/products.hpp"
#include "psw/rng.hpp"

using namespace psw;

TEST_CASE("strong products of small factors") {
    Graph k2 = complete_graph(2);
    StrongProduct k2k2 = strong_product(k2, k2);
    CHECK(k2k2.graph.n == 4);
    CHECK(k2k2.graph.edge_count() == 6); // K4

    Graph p3 = path_graph(3);
    Graph k1 = complete_graph(1);
    StrongProduct ident = strong_product(p3, k1);
    CHECK(ident.graph.edges == p3.edges);

    // fix the two-path product by brute-force enumeration of the rule
    Graph p2 = path_graph(2);
    StrongProduct pr = strong_product(p2, p3);
    std::vector<std::pair<int, int>> expect;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            int v = a / 3, x = a % 3, w = b / 3, y = b % 3;
            bool e1 = p2.has_edge(v, w), e2 = p3.has_edge(x, y);
            if ((e1 && x == y) || (v == w && e2) || (e1 && e2)) expect.emplace_back(a, b);
        }
    CHECK(pr.graph.edge_count() == 11);
    CHECK(pr.graph.edges == expect);
}

TEST_CASE("product vertex count is multiplicative") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        int n1 = static_cast<int>(rand_int(rng, 1, 5));
        int n2 = static_cast<int>(rand_int(rng, 1, 5));
        std::vector<std::pair<int, int>> e1, e2;
        for (int i = 0; i < n1; ++i)
            for (int j = i + 1; j < n1; ++j)
                if (rand_int(rng, 0, 1)) e1.emplace_back(i, j);
        for (int i = 0; i < n2; ++i)
            for (int j = i + 1; j < n2; ++j)
                if (rand_int(rng, 0, 1)) e2.emplace_back(i, j);
        Graph a = build_graph(n1, std::move(e1)), b = build_graph(n2, std::move(e2));
        CHECK(strong_product(a, b).graph.n == n1 * n2);
    }
}

TEST_CASE("H-partition validation") {
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    HPartition single = make_hpartition(complete_graph(1), {{0, 1, 2}}, 3);
    CHECK(validate_hpartition(tri, single).empty());

    Graph p3 = path_graph(3);
    HPartition split = make_hpartition(complete_graph(2), {{0, 2}, {1}}, 3);
    CHECK(validate_hpartition(p3, split).empty());

    HPartition bad_host = make_hpartition(build_graph(2, {}), {{0, 2}, {1}}, 3);
    auto bad = validate_hpartition(p3, bad_host);
    CHECK(bad == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(make_hpartition(complete_graph(2), {{0, 1}, {1, 2}}, 3), Error);
    CHECK_THROWS_AS(make_hpartition(complete_graph(2), {{0}, {1}}, 3), Error);
}

TEST_CASE("partition width") {
    Graph g5 = path_graph(5);
    HPartition one = make_hpartition(complete_graph(1), {{0, 1, 2, 3, 4}}, 5);
    CHECK(partition_width(one) == 5);
    HPartition singles = make_hpartition(path_graph(5), {{0}, {1}, {2}, {3}, {4}}, 5);
    CHECK(partition_width(singles) == 1);

    GhGraph g2 = build_gh(2);
    auto [hp, lay] = build_leftmost_path_partition(g2);
    (void)lay;
    CHECK(partition_width(hp) == 3);
}

TEST_CASE("bfs layering") {
    Graph p3 = path_graph(3);
    Layering lay = bfs_layering(p3, 0);
    CHECK(lay.layers == std::vector<VertexSet>{{0}, {1}, {2}});

    for (int h = 1; h <= 6; ++h) {
        GhGraph gh = build_gh(h);
        Layering dl = bfs_layering(gh.graph, 0);
        CHECK(dl.layer_count() == h + 1);
        for (int v = 0; v < gh.graph.n; ++v) CHECK(dl.layer_of[v] == gh.tree.depth(v));
        CHECK(validate_layering(gh.graph, dl).empty());
    }

    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    Layering sl = bfs_layering(star, 0);
    CHECK(sl.layers == std::vector<VertexSet>{{0}, {1, 2, 3, 4}});

    Graph split = build_graph(3, {{0, 1}});
    CHECK_THROWS_AS(bfs_layering(split, 0), Error);
}

TEST_CASE("layering validation flags long edges") {
    Graph p3 = path_graph(3);
    Layering lay = make_layering({{0, 2}, {}, {1}}, 3);
    auto bad = validate_layering(p3, lay);
    CHECK(bad == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("diameter_spread picks a heavy layer") {
    GhGraph g3 = build_gh(3);
    Layering dl = bfs_layering(g3.graph, 0);
    VertexSet d3;
    auto [lo, hi] = g3.level_path(3);
    for (int v = lo; v <= hi; ++v) d3.push_back(v);
    auto [layer, count] = diameter_spread(g3.graph, d3, dl);
    CHECK(layer == 3);
    CHECK(count == 8);
    auto diam = diameter_of_subset(g3.graph, d3);
    REQUIRE(diam.has_value());
    CHECK(count * (*diam + 1) >= static_cast<long long>(d3.size()));

    // subset inside one layer comes back whole
    auto [l2, c2] = diameter_spread(g3.graph, {7, 9, 12}, dl);
    CHECK(l2 == 3);
    CHECK(c2 == 3);

    Graph p4 = path_graph(4);
    Layering pl = bfs_layering(p4, 0);
    auto [l3, c3] = diameter_spread(p4, {0, 3}, pl);
    (void)l3;
    CHECK(c3 == 1);
}

TEST_CASE("spread bound holds on random subsets") {
    Rng rng(29);
    for (int rep = 0; rep < 60; ++rep) {
        int h = static_cast<int>(rand_int(rng, 1, 5));
        GhGraph gh = build_gh(h);
        Layering lay = bfs_layering(gh.graph, static_cast<int>(rand_int(rng, 0, gh.graph.n - 1)));
        int k = static_cast<int>(rand_int(rng, 1, std::min(8, gh.graph.n)));
        VertexSet r = rand_subset(rng, gh.graph.n, k);
        auto [layer, count] = diameter_spread(gh.graph, r, lay);
        (void)layer;
        auto diam = diameter_of_subset(gh.graph, r);
        REQUIRE(diam.has_value());
        CHECK(count * (*diam + 1) >= static_cast<long long>(r.size()));
    }
}

TEST_CASE("partitions to embeddings and back") {
    // triangle into K1 x K1 x K3
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    HPartition one = make_hpartition(complete_graph(1), {{0, 1, 2}}, 3);
    Layering onelay = make_layering({{0, 1, 2}}, 3);
    ProductEmbedding e = partitions_to_embedding(tri, one, onelay, 3);
    CHECK(e.clique_size == 3);
    CHECK(validate_embedding(tri, e).empty());

    // the 3-vertex family member into K2 x P2 x K2
    GhGraph g1 = build_gh(1);
    HPartition hp = make_hpartition(complete_graph(2), {{0}, {1, 2}}, 3);
    Layering dl = bfs_layering(g1.graph, 0);
    ProductEmbedding e2 = partitions_to_embedding(g1.graph, hp, dl, 2);
    CHECK(e2.factor_p_length == 1);
    CHECK(validate_embedding(g1.graph, e2).empty());
    CHECK_THROWS_WITH_AS(partitions_to_embedding(g1.graph, hp, dl, 1),
                         doctest::Contains("CellTooLarge"), Error);

    // singleton parts and layers on a path: the identity-like case
    Graph p5 = path_graph(5);
    HPartition sp = make_hpartition(path_graph(5), {{0}, {1}, {2}, {3}, {4}}, 5);
    Layering sl = bfs_layering(p5, 0);
    ProductEmbedding e3 = partitions_to_embedding(p5, sp, sl, 1);
    CHECK(validate_embedding(p5, e3).empty());
}

TEST_CASE("embedding to partitions") {
    // K4 into K2 x K2 x K1, bijectively
    Graph k4 = complete_graph(4);
    ProductEmbedding e;
    e.factor_h = complete_graph(2);
    e.factor_p_length = 1;
    e.clique_size = 1;
    e.map = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
    auto [hp, lay, c] = embedding_to_partitions(k4, e);
    CHECK(c == 1);
    CHECK(hp.parts == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK(lay.layers == std::vector<VertexSet>{{0, 2}, {1, 3}});
    CHECK(validate_hpartition(k4, hp).empty());
    CHECK(validate_layering(k4, lay).empty());

    // identity embedding of g into g x K1 x K1
    Graph c5 = cycle_graph(5);
    ProductEmbedding id;
    id.factor_h = c5;
    id.factor_p_length = 0;
    id.clique_size = 1;
    for (int v = 0; v < 5; ++v) id.map.push_back({v, 0, 0});
    auto [hp2, lay2, c2] = embedding_to_partitions(c5, id);
    (void)c2;
    CHECK(partition_width(hp2) == 1);
    CHECK(lay2.layer_count() == 1);

    ProductEmbedding broken = id;
    broken.map[1] = broken.map[0];
    CHECK_THROWS_AS(embedding_to_partitions(c5, broken), Error);
}

TEST_CASE("round trips reproduce the partitions") {
    Rng rng(31);
    for (int rep = 0; rep < 100; ++rep) {
        int nh = static_cast<int>(rand_int(rng, 1, 5));
        std::vector<std::pair<int, int>> hes;
        for (int i = 0; i < nh; ++i)
            for (int j = i + 1; j < nh; ++j)
                if (rand_int(rng, 0, 99) < 50) hes.emplace_back(i, j);
        Graph H = build_graph(nh, std::move(hes));
        int plen = static_cast<int>(rand_int(rng, 0, 4));
        int c = static_cast<int>(rand_int(rng, 1, 3));
        StrongProduct hp_prod = strong_product(H, path_graph(plen + 1));
        StrongProduct full = strong_product(hp_prod.graph, complete_graph(c));

        VertexSet keep;
        for (int v = 0; v < full.graph.n; ++v)
            if (rand_int(rng, 0, 99) < 55) keep.push_back(v);
        if (keep.empty()) keep.push_back(0);
        auto ind = induced_subgraph(full.graph, keep);

        ProductEmbedding emb;
        emb.factor_h = H;
        emb.factor_p_length = plen;
        emb.clique_size = c;
        for (int v = 0; v < ind.graph.n; ++v) {
            auto [q1, k] = full.coords(ind.to_old[v]);
            auto [hv, pv] = hp_prod.coords(q1);
            emb.map.push_back({hv, pv, k});
        }
        REQUIRE(validate_embedding(ind.graph, emb).empty());
        auto [hp, lay, c2] = embedding_to_partitions(ind.graph, emb);
        ProductEmbedding emb2 = partitions_to_embedding(ind.graph, hp, lay, c2);
        auto [hp2, lay2, c3] = embedding_to_partitions(ind.graph, emb2);
        (void)c3;
        CHECK(hp2.parts == hp.parts);
        CHECK(lay2.layers == lay.layers);
    }
}

TEST_CASE("composing tree-partitions") {
    // trivial outer partitions leave the inner one alone
    Graph p4 = path_graph(4);
    HPartition hp = make_hpartition(path_graph(2), {{0, 1}, {2, 3}}, 4);
    HPartition ident = make_hpartition(path_graph(2), {{0}, {1}}, 2);
    HPartition composed = compose_tree_partition(p4, hp, ident);
    CHECK(composed.parts == hp.parts);

    HPartition collapse = make_hpartition(complete_graph(1), {{0, 1}}, 2);
    HPartition all = compose_tree_partition(p4, hp, collapse);
    CHECK(all.parts == std::vector<VertexSet>{{0, 1, 2, 3}});

    CHECK_THROWS_AS(compose_tree_partition(p4, hp, make_hpartition(complete_graph(1), {{0}}, 1)),
                    Error);

    // the 7-vertex member through its chain partition and an oracle
    // partition of the host
    GhGraph g2 = build_gh(2);
    auto [chain_hp, lay] = build_leftmost_path_partition(g2);
    (void)lay;
    HPartition host_tp = min_width_tree_partition(chain_hp.host);
    CHECK(partition_width(host_tp) == 2);
    HPartition tp = compose_tree_partition(g2.graph, chain_hp, host_tp);
    CHECK(validate_hpartition(g2.graph, tp).empty());
    CHECK(host_is_tree(tp.host));
    CHECK(partition_width(tp) <= partition_width(host_tp) * partition_width(chain_hp));
}

TEST_CASE("shared neighbor bags") {
    // the hypothesis matters: opposite ends of a path are in different
    // components after the middle bag goes
    Graph p4 = path_graph(4);
    HPartition tp = make_hpartition(path_graph(2), {{1, 2}, {0, 3}}, 4);
    CHECK(validate_hpartition(p4, tp).empty());
    CHECK_THROWS_WITH_AS(shared_neighbor_bag(p4, tp, 0, 0, 3), doctest::Contains("component"),
                         Error);

    Graph c4 = cycle_graph(4);
    HPartition tp2 = make_hpartition(path_graph(3), {{0}, {1, 3}, {2}}, 4);
    CHECK(validate_hpartition(c4, tp2).empty());
    CHECK(shared_neighbor_bag(c4, tp2, 0, 1, 3) == 1);
    CHECK(shared_neighbor_bag(c4, tp2, 0, 1, 1) == 1); // v = w
    // the answer is the only neighbor of x carrying both vertices
    for (int y : tp2.host.neighbors(0))
        if (y != 1) CHECK(!(set_contains(tp2.parts[y], 1) && set_contains(tp2.parts[y], 3)));
}
