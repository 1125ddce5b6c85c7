#include "psw/percolation.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "psw/rational.hpp"

namespace psw {

namespace {

// all-left walk from v down to a leaf; caller guarantees the subtree of v
// avoids the blocking set
std::vector<int> leftmost_path(const CompleteBinaryTree& t, int v) {
    std::vector<int> path{v};
    while (!t.is_leaf(path.back())) path.push_back(t.left(path.back()));
    return path;
}

// Induction of the single-escape lemma on the subtree rooted at r0.
// s_sub: sorted members of the blocking set inside that subtree (may
// include r0 itself); 1 <= |s_sub| < 2^{height(r0)}.
Escape escape_rec(const CompleteBinaryTree& t, int r0, const VertexSet& s_sub) {
    int h0 = t.height_of(r0);
    assert(!s_sub.empty() &&
           static_cast<long long>(s_sub.size()) < (1LL << h0));

    if (h0 == 1) {
        int l = t.left(r0);
        int v = set_contains(s_sub, l) ? t.right(r0) : l;
        return {v, {v}};
    }

    int d0 = t.depth(r0);
    // largest level (relative depth) fully covered by s ∪ {r0}; level 0 is
    // always covered, and 2^level <= |s| keeps the scan short
    std::map<int, long long> per_depth;
    for (int v : s_sub) per_depth[t.depth(v) - d0]++;
    int lvl = 0;
    while (per_depth.count(lvl + 1) && per_depth[lvl + 1] == (1LL << (lvl + 1))) ++lvl;

    // pigeonhole over the 2^{lvl+1} subtrees below the first uncovered
    // level; leftmost strict minimum keeps the choice deterministic
    std::map<int, long long> load;
    for (int v : s_sub) {
        if (t.depth(v) - d0 >= lvl + 1) load[t.ancestor_at_depth(v, d0 + lvl + 1)]++;
    }
    // candidates are the depth-(lvl+1) descendants of r0, a contiguous id
    // range, scanned left to right
    int cand_lo = r0;
    for (int i = 0; i <= lvl; ++i) cand_lo = t.left(cand_lo);
    long long cand_count = 1LL << (lvl + 1);
    int best = -1;
    long long best_load = -1;
    for (long long i = 0; i < cand_count; ++i) {
        int cand = cand_lo + static_cast<int>(i);
        long long ld = load.count(cand) ? load[cand] : 0;
        if (best < 0 || ld < best_load) { best = cand; best_load = ld; }
    }

    if (best_load == 0) return {best, leftmost_path(t, best)};

    VertexSet inner;
    for (int v : s_sub)
        if (t.is_ancestor(best, v)) inner.push_back(v);
    Escape e = escape_rec(t, best, inner);
    if (set_contains(s_sub, t.parent(e.vertex))) return e;
    // otherwise the parent is the chosen subtree root, itself unblocked
    assert(t.parent(e.vertex) == best && !set_contains(s_sub, best));
    std::vector<int> path{best};
    path.insert(path.end(), e.path.begin(), e.path.end());
    return {best, std::move(path)};
}

} // namespace

Escape find_escape_below(const CompleteBinaryTree& t, int r, const VertexSet& s_sub) {
    int h0 = t.height_of(r);
    require(!s_sub.empty() && static_cast<long long>(s_sub.size()) < (1LL << h0), "NoEscape",
            "need 1 <= |s| < 2^height");
    for (int v : s_sub)
        require(t.is_ancestor(r, v), "PreconditionFailed", "blocking vertex outside subtree");
    require(h0 >= 1, "NoEscape", "subtree too small");
    return escape_rec(t, r, s_sub);
}

Escape find_escape(const CompleteBinaryTree& t, const VertexSet& s) {
    require(!s.empty() && static_cast<long long>(s.size()) < (1LL << t.height), "NoEscape",
            "need 1 <= |s| < 2^h");
    for (int v : s)
        require(t.valid_vertex(v), "PreconditionFailed", "blocking vertex outside tree");
    return escape_rec(t, 0, s);
}

std::pair<Escape, Escape> find_two_escapes_below(const CompleteBinaryTree& t, int r,
                                                 const VertexSet& s_sub) {
    int h0 = t.height_of(r);
    require(h0 >= 1, "NoEscape", "subtree too small");
    require(!s_sub.empty() && static_cast<long long>(s_sub.size()) < (1LL << (h0 - 1)),
            "NoEscape", "need 1 <= |s| < 2^{height-1}");

    auto one_side = [&](int child) -> Escape {
        VertexSet side;
        for (int v : s_sub)
            if (t.is_ancestor(child, v)) side.push_back(v);
        if (side.empty()) return {child, leftmost_path(t, child)};
        Escape e = escape_rec(t, child, side);
        if (set_contains(s_sub, t.parent(e.vertex))) return e;
        assert(t.parent(e.vertex) == child && !set_contains(s_sub, child));
        std::vector<int> path{child};
        path.insert(path.end(), e.path.begin(), e.path.end());
        return {child, std::move(path)};
    };
    return {one_side(t.left(r)), one_side(t.right(r))};
}

std::pair<Escape, Escape> find_two_escapes(const CompleteBinaryTree& t, const VertexSet& s) {
    require(t.height >= 1, "NoEscape", "tree too small");
    require(!s.empty() && static_cast<long long>(s.size()) < (1LL << (t.height - 1)), "NoEscape",
            "need 1 <= |s| < 2^{h-1}");
    for (int v : s)
        require(t.valid_vertex(v), "PreconditionFailed", "blocking vertex outside tree");
    return find_two_escapes_below(t, 0, s);
}

CompatibleCheck is_compatible(const CompleteBinaryTree& t, int v, const VertexSet& s) {
    require(!t.is_root(v), "RootHasNoParent", "the root has no parent");
    if (!set_contains(s, t.parent(v))) return {};
    if (set_contains(s, v)) return {};
    // depth-first descent through unblocked vertices only
    std::vector<int> path{v};
    std::vector<std::pair<int, int>> stack{{v, 0}}; // (vertex, next child 0/1/2)
    while (!stack.empty()) {
        auto& [u, next] = stack.back();
        if (t.is_leaf(u)) return {true, path};
        if (next == 2) {
            stack.pop_back();
            path.pop_back();
            continue;
        }
        int child = next == 0 ? t.left(u) : t.right(u);
        ++next;
        if (!set_contains(s, child)) {
            stack.push_back({child, 0});
            path.push_back(child);
        }
    }
    return {};
}

std::vector<std::string> validate_compact(const CompactFamily& f) {
    std::vector<std::string> bad;
    CompleteBinaryTree t{f.tree_height};
    if (f.parts.size() != f.anchors.size()) {
        bad.push_back("part/anchor count mismatch");
        return bad;
    }
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
        const auto& part = f.parts[i];
        int a = f.anchors[i];
        if (!t.valid_vertex(a)) {
            bad.push_back("anchor " + std::to_string(i) + " outside tree");
            continue;
        }
        if (static_cast<long long>(part.size()) < f.k)
            bad.push_back("part " + std::to_string(i) + " smaller than k");
        if (!is_unrelated(t, part))
            bad.push_back("part " + std::to_string(i) + " not unrelated");
        for (int v : part) {
            if (!t.is_ancestor(a, v))
                bad.push_back("anchor of part " + std::to_string(i) + " is not an ancestor of " +
                              std::to_string(v));
            else if (t.tree_distance(v, a) > f.ell)
                bad.push_back("part " + std::to_string(i) + " member " + std::to_string(v) +
                              " farther than l from its anchor");
        }
        if (t.height_of(a) < f.m)
            bad.push_back("anchor " + std::to_string(i) + " below height m");
    }
    VertexSet anchors = sorted_unique(std::vector<int>(f.anchors.begin(), f.anchors.end()));
    if (anchors.size() != f.anchors.size() || !is_unrelated(t, anchors))
        bad.push_back("anchors not unrelated");

    // consequences: union unrelated, parts blockwise in left-to-right order
    std::vector<Vertex> all;
    for (auto& part : f.parts) all.insert(all.end(), part.begin(), part.end());
    VertexSet uni = sorted_unique(all);
    if (uni.size() != all.size() || !is_unrelated(t, uni)) {
        bad.push_back("union of parts not unrelated");
        return bad;
    }
    std::vector<std::pair<long long, std::size_t>> order;
    for (std::size_t i = 0; i < f.parts.size(); ++i)
        order.emplace_back(t.leaf_interval(f.anchors[i]).first, i);
    std::sort(order.begin(), order.end());
    long long prev_hi = -1;
    for (auto& [lo, i] : order) {
        (void)lo;
        for (int v : left_to_right_order(t, f.parts[i])) {
            auto [vlo, vhi] = t.leaf_interval(v);
            if (vlo <= prev_hi) bad.push_back("parts not blockwise ordered");
            prev_hi = std::max(prev_hi, vhi);
        }
    }
    return bad;
}

GrownFamily grow_compact(const CompactFamily& f, const VertexSet& s) {
    auto bad = validate_compact(f);
    require(bad.empty(), "PreconditionFailed", "invalid compact family: " + (bad.empty() ? "" : bad.front()));
    CompleteBinaryTree t{f.tree_height};

    std::vector<Vertex> all;
    for (auto& part : f.parts) all.insert(all.end(), part.begin(), part.end());
    require(set_subset(sorted_unique(all), s), "PreconditionFailed",
            "the union of the parts must lie inside s");
    long long gap = f.m - f.ell - 2;
    bool size_ok = !s.empty() && (gap >= 62 || static_cast<long long>(s.size()) < (1LL << std::max(0LL, gap)));
    require(size_ok, "PreconditionFailed", "need 1 <= |s| < 2^{m-l-2}");

    GrownFamily out;
    out.family.tree_height = f.tree_height;
    out.family.anchors = f.anchors;
    out.family.k = 2 * f.k;
    out.family.ell = f.ell + ceil_log2(BigInt(static_cast<long long>(s.size()))) + 2;
    out.family.m = f.m;

    for (auto& part : f.parts) {
        std::vector<std::pair<int, std::vector<int>>> grown;
        for (int r : part) {
            VertexSet s_r;
            for (int v : s)
                if (t.is_ancestor(r, v)) s_r.push_back(v);
            auto [e1, e2] = find_two_escapes_below(t, r, s_r);
            grown.emplace_back(e1.vertex, e1.path);
            grown.emplace_back(e2.vertex, e2.path);
        }
        std::sort(grown.begin(), grown.end());
        VertexSet np;
        std::vector<std::vector<int>> npaths;
        for (auto& [v, p] : grown) {
            np.push_back(v);
            npaths.push_back(std::move(p));
        }
        out.family.parts.push_back(std::move(np));
        out.paths.push_back(std::move(npaths));
    }
    return out;
}

} // namespace psw
