#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psw/oracle.hpp"
#include "psw/percolation.hpp"
#include "psw/rng.hpp"

using namespace psw;

namespace {

// clause-by-clause check of a single escape, independent of the search
void check_escape(const CompleteBinaryTree& t, const VertexSet& s, const Escape& e,
                  long long pow_cap) {
    CHECK(e.vertex != 0);
    CHECK((1LL << t.depth(e.vertex)) <= pow_cap);
    int p = t.parent(e.vertex);
    CHECK((p == 0 || set_contains(s, p)));
    REQUIRE(!e.path.empty());
    CHECK(e.path.front() == e.vertex);
    CHECK(t.is_leaf(e.path.back()));
    for (std::size_t i = 0; i + 1 < e.path.size(); ++i) {
        bool child = e.path[i + 1] == t.left(e.path[i]) || e.path[i + 1] == t.right(e.path[i]);
        CHECK(child);
    }
    for (int v : e.path) CHECK(!set_contains(s, v));
}

} // namespace

TEST_CASE("single escapes on tiny trees") {
    CompleteBinaryTree t1 = build_binary_tree(1);
    Escape e = find_escape(t1, {1});
    CHECK(e.vertex == 2);

    CompleteBinaryTree t2 = build_binary_tree(2);
    e = find_escape(t2, {1});
    CHECK(e.vertex == 2);
    check_escape(t2, {1}, e, 2);

    // root in s is handled by the recursion
    e = find_escape(t2, {0});
    check_escape(t2, {0}, e, 2);

    CHECK_THROWS_AS(find_escape(t2, {}), Error);
    VertexSet too_big{0, 1, 2, 3};
    CHECK_THROWS_AS(find_escape(t2, too_big), Error);
}

TEST_CASE("single escapes, exhaustive at height 2") {
    CompleteBinaryTree t = build_binary_tree(2);
    for (std::uint32_t mask = 1; mask < (1u << 7); ++mask) {
        if (std::popcount(mask) > 3) continue;
        VertexSet s;
        for (int v = 0; v < 7; ++v)
            if (mask & (1u << v)) s.push_back(v);
        Escape e = find_escape(t, s);
        check_escape(t, s, e, 2LL * static_cast<long long>(s.size()));
    }
}

TEST_CASE("double escapes") {
    CompleteBinaryTree t2 = build_binary_tree(2);
    auto [e1, e2] = find_two_escapes(t2, {1});
    CHECK((e1.vertex == 3 || e1.vertex == 4)); // a child of the blocked vertex
    CHECK(e2.vertex == 2);
    check_escape(t2, {1}, e1, 4);
    check_escape(t2, {1}, e2, 4);

    CompleteBinaryTree t3 = build_binary_tree(3);
    for (std::uint32_t mask = 1; mask < (1u << 15); ++mask) {
        if (std::popcount(mask) > 3) continue;
        VertexSet s;
        for (int v = 0; v < 15; ++v)
            if (mask & (1u << v)) s.push_back(v);
        auto [a, b] = find_two_escapes(t3, s);
        check_escape(t3, s, a, 4LL * static_cast<long long>(s.size()));
        check_escape(t3, s, b, 4LL * static_cast<long long>(s.size()));
        CHECK(a.vertex != b.vertex);
        CHECK(is_unrelated(t3, sorted_unique({a.vertex, b.vertex})));
    }

    // the hypothesis boundary: |s| = 2^{h-1} is rejected
    CompleteBinaryTree t1 = build_binary_tree(1);
    CHECK_THROWS_AS(find_two_escapes(t1, {1}), Error);
}

TEST_CASE("compatibility checks") {
    CompleteBinaryTree t3 = build_binary_tree(3);
    auto leaf = is_compatible(t3, 7, {3});
    CHECK(leaf.ok);
    CHECK(leaf.path == std::vector<int>{7});

    CHECK(!is_compatible(t3, 7, {5}).ok); // parent not in s

    // every downward route blocked
    VertexSet wall{0, 7, 8, 9, 10};
    CHECK(!is_compatible(t3, 1, wall).ok);

    CHECK_THROWS_AS(is_compatible(t3, 0, {1}), Error);

    // a returned witness is a genuine descending path
    auto good = is_compatible(t3, 1, {0, 7, 9});
    REQUIRE(good.ok);
    CHECK(good.path.front() == 1);
    CHECK(t3.is_leaf(good.path.back()));
    for (int v : good.path) CHECK(!set_contains({0, 7, 9}, v));
}

TEST_CASE("compact family validation") {
    CompleteBinaryTree t4 = build_binary_tree(4);
    CompactFamily singles;
    singles.tree_height = 4;
    singles.parts = {{3}, {4}};
    singles.anchors = {3, 4};
    singles.k = 1;
    singles.ell = 0;
    singles.m = t4.height_of(3);
    CHECK(validate_compact(singles).empty());

    CompactFamily related = singles;
    related.anchors = {1, 3}; // 1 is an ancestor of 3
    related.parts = {{1}, {3}};
    CHECK(!validate_compact(related).empty());

    CompactFamily starving = singles;
    starving.k = 2;
    CHECK(!validate_compact(starving).empty());
}

TEST_CASE("growing a compact family") {
    // one singleton part at a height-3 vertex of T_4
    CompactFamily fam;
    fam.tree_height = 4;
    fam.parts = {{1}};
    fam.anchors = {1};
    fam.k = 1;
    fam.ell = 0;
    fam.m = 3;
    CompleteBinaryTree t{4};

    GrownFamily out = grow_compact(fam, {1});
    CHECK(validate_compact(out.family).empty());
    CHECK(out.family.k == 2);
    CHECK(out.family.ell == 0 + 0 + 2); // ceil(log2 1) = 0
    REQUIRE(out.family.parts.size() == 1);
    CHECK(out.family.parts[0] == VertexSet{3, 4}); // the two children
    for (std::size_t j = 0; j < out.family.parts[0].size(); ++j) {
        auto cc = is_compatible(t, out.family.parts[0][j], {1});
        CHECK(cc.ok);
        CHECK(out.paths[0][j].front() == out.family.parts[0][j]);
    }

    // size bound: |s| must stay under 2^{m-l-2} = 2
    CHECK_THROWS_WITH_AS(grow_compact(fam, {1, 2}), doctest::Contains("2^{m-l-2}"), Error);
    // containment: s must include the union of the parts
    CHECK_THROWS_WITH_AS(grow_compact(fam, {2}), doctest::Contains("inside s"), Error);
}

TEST_CASE("randomized growth keeps all the clauses") {
    SweepParams par;
    par.height = 8;
    par.families = 100;
    par.seed = 99;
    SweepReport rep = exhaustive_lemma_sweep(11, par);
    CHECK(rep.instances == 100);
    CHECK(rep.failures == 0);
}

TEST_CASE("part sizes double exactly") {
    Rng rng(41);
    CompleteBinaryTree t = build_binary_tree(7);
    for (int rep = 0; rep < 30; ++rep) {
        int da = static_cast<int>(rand_int(rng, 0, 2));
        CompactFamily fam;
        fam.tree_height = 7;
        fam.k = 1;
        fam.ell = 0;
        fam.m = 7 - da;
        for (int pos : rand_subset(rng, 1 << da, static_cast<int>(rand_int(rng, 1, 1 << da)))) {
            int a = t.level_first(da) + pos;
            fam.parts.push_back({a});
            fam.anchors.push_back(a);
        }
        VertexSet s;
        for (auto& part : fam.parts) s.push_back(part[0]);
        std::sort(s.begin(), s.end());
        GrownFamily out = grow_compact(fam, s);
        for (std::size_t i = 0; i < out.family.parts.size(); ++i)
            CHECK(out.family.parts[i].size() == 2 * fam.parts[i].size());
    }
}
