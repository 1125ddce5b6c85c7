#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "psw/constructions.hpp"
#include "psw/generators.hpp"
#include "psw/oracle.hpp"
#include "psw/products.hpp"

using namespace psw;

TEST_CASE("chain partition of the 7-vertex member") {
    GhGraph g2 = build_gh(2);
    auto [hp, lay] = build_leftmost_path_partition(g2);
    CHECK(hp.parts == std::vector<VertexSet>{{0, 1, 3}, {2, 5}, {4}, {6}});
    CHECK(partition_width(hp) == 3);
    // host is a triangle with a pendant vertex
    CHECK(hp.host.n == 4);
    CHECK(hp.host.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}});
    CHECK(exact_treewidth_tiny(hp.host) == 2);
    CHECK(validate_hpartition(g2.graph, hp).empty());
    CHECK(validate_layering(g2.graph, lay).empty());
}

TEST_CASE("chain partitions have one vertex per depth and unit cells") {
    for (int h = 1; h <= 8; ++h) {
        GhGraph gh = build_gh(h);
        auto [hp, lay] = build_leftmost_path_partition(gh);
        CHECK(static_cast<long long>(hp.parts.size()) == (1LL << h));
        CHECK(validate_hpartition(gh.graph, hp).empty());
        for (const auto& part : hp.parts) {
            // chains descend one depth per step
            for (std::size_t i = 0; i + 1 < part.size(); ++i)
                CHECK(gh.tree.depth(part[i + 1]) == gh.tree.depth(part[i]) + 1);
        }
        std::map<std::pair<int, int>, int> cell;
        for (int v = 0; v < gh.graph.n; ++v)
            CHECK(++cell[{hp.part_of[v], lay.layer_of[v]}] <= 1);
        // and the c = 1 embedding exists
        ProductEmbedding emb = partitions_to_embedding(gh.graph, hp, lay, 1);
        CHECK(validate_embedding(gh.graph, emb).empty());
    }
}

TEST_CASE("degree-two reduction decides treewidth two") {
    CHECK(*treewidth_at_most_2(path_graph(6)).treewidth_le_2);
    CHECK(*treewidth_at_most_2(cycle_graph(5)).treewidth_le_2);
    CHECK(*treewidth_at_most_2(build_graph(1, {})).treewidth_le_2);

    StructureVerdict k4 = treewidth_at_most_2(complete_graph(4));
    CHECK(!*k4.treewidth_le_2);
    CHECK(!k4.trace.empty()); // the stall is recorded

    // K_{2,3} reduces (treewidth 2) even though it is not outerplanar
    Graph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(*treewidth_at_most_2(k23).treewidth_le_2);

    for (int h = 1; h <= 8; ++h) {
        auto [hp, lay] = build_leftmost_path_partition(build_gh(h));
        (void)lay;
        CHECK(*treewidth_at_most_2(hp.host).treewidth_le_2);
    }
}

TEST_CASE("outerplanarity by forbidden minors") {
    CHECK(*outerplanarity_check_small(cycle_graph(5)).outerplanar);

    Graph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    StructureVerdict v = outerplanarity_check_small(k23);
    REQUIRE(v.outerplanar.has_value());
    CHECK(!*v.outerplanar);
    CHECK(v.minor_kind == "K2,3");
    REQUIRE(v.minor_paths.size() == 3);
    // three internally disjoint long paths between the same endpoints
    int a = v.minor_paths[0].front(), b = v.minor_paths[0].back();
    std::map<int, int> internal_uses;
    for (const auto& path : v.minor_paths) {
        CHECK(path.front() == a);
        CHECK(path.back() == b);
        CHECK(path.size() >= 3);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(k23.has_edge(path[i], path[i + 1]));
        for (std::size_t i = 1; i + 1 < path.size(); ++i) CHECK(++internal_uses[path[i]] == 1);
    }

    StructureVerdict k4 = outerplanarity_check_small(complete_graph(4));
    REQUIRE(k4.outerplanar.has_value());
    CHECK(!*k4.outerplanar);
    CHECK(k4.minor_kind == "K4");
    REQUIRE(k4.minor_paths.size() == 6);
    std::map<int, int> internal;
    for (const auto& path : k4.minor_paths) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(complete_graph(4).has_edge(path[i], path[i + 1]));
        for (std::size_t i = 1; i + 1 < path.size(); ++i) CHECK(++internal[path[i]] == 1);
    }

    // above the budget the answer is unknown
    StructureVerdict unknown = outerplanarity_check_small(cycle_graph(8), 4);
    CHECK(!unknown.outerplanar.has_value());

    for (int h = 1; h <= 6; ++h) {
        auto [hp, lay] = build_leftmost_path_partition(build_gh(h));
        (void)lay;
        StructureVerdict hv = outerplanarity_check_small(hp.host);
        REQUIRE(hv.outerplanar.has_value());
        CHECK(*hv.outerplanar);
        CHECK(*hv.treewidth_le_2); // outerplanar implies treewidth <= 2
    }
}

TEST_CASE("the chain partition defeats the shared-bag argument") {
    // the root chain neighbors exactly h vertices of the big component, one
    // from each of h distinct parts
    for (int h = 3; h <= 8; ++h) {
        GhGraph gh = build_gh(h);
        auto [hp, lay] = build_leftmost_path_partition(gh);
        (void)lay;
        int chain_part = hp.part_of[0];
        const VertexSet& chain = hp.parts[chain_part];
        VertexSet nb;
        for (int v : chain)
            for (int w : gh.graph.neighbors(v))
                if (!set_contains(chain, w)) nb.push_back(w);
        nb = sorted_unique(std::move(nb));
        auto comps = components_avoiding(gh.graph, chain);
        bool witnessed = false;
        for (const auto& comp : comps) {
            VertexSet inter = set_intersect(nb, comp);
            if (static_cast<long long>(inter.size()) < h) continue;
            std::map<int, int> per_part;
            bool spread = true;
            for (int v : inter) spread = spread && ++per_part[hp.part_of[v]] <= 1;
            witnessed = witnessed || spread;
        }
        CHECK(witnessed);
    }
}
