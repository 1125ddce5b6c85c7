#ifndef PSW_BINARY_TREE_HPP
#define PSW_BINARY_TREE_HPP

#include <utility>
#include <vector>

#include "psw/graph.hpp"

namespace psw {

// Complete binary tree of height h with implicit heap indexing: root is 0,
// children of v are 2v+1 / 2v+2, so depth-d vertices occupy the id range
// [2^d - 1, 2^{d+1} - 2] in left-to-right order. Nothing is stored beyond h.
struct CompleteBinaryTree {
    int height = 0;

    long long vertex_count() const { return (1LL << (height + 1)) - 1; }
    bool valid_vertex(long long v) const { return v >= 0 && v < vertex_count(); }

    int depth(int v) const {
        int d = 0;
        long long w = v;
        while (w > 0) { w = (w - 1) / 2; ++d; }
        return d;
    }
    int height_of(int v) const { return height - depth(v); }
    int parent(int v) const { return (v - 1) / 2; }
    int left(int v) const { return 2 * v + 1; }
    int right(int v) const { return 2 * v + 2; }
    bool is_leaf(int v) const { return depth(v) == height; }
    bool is_root(int v) const { return v == 0; }

    int level_first(int d) const { return (1 << d) - 1; }
    int level_last(int d) const { return (1 << (d + 1)) - 2; }
    long long level_size(int d) const { return 1LL << d; }

    // position of v within its level, 0-based from the left
    long long level_position(int v) const { return static_cast<long long>(v) - level_first(depth(v)); }

    // leaf positions (0..2^h - 1) spanned by the subtree of v, inclusive
    std::pair<long long, long long> leaf_interval(int v) const {
        int d = depth(v);
        long long p = level_position(v);
        long long w = 1LL << (height - d);
        return {p * w, (p + 1) * w - 1};
    }

    // a is an ancestor of v; every vertex is an ancestor of itself
    bool is_ancestor(int a, int v) const {
        int da = depth(a), dv = depth(v);
        if (da > dv) return false;
        int w = v;
        for (int i = 0; i < dv - da; ++i) w = parent(w);
        return w == a;
    }

    int ancestor_at_depth(int v, int d) const {
        int w = v;
        for (int i = depth(v); i > d; --i) w = parent(w);
        return w;
    }

    int lca(int u, int v) const {
        int du = depth(u), dv = depth(v);
        while (du > dv) { u = parent(u); --du; }
        while (dv > du) { v = parent(v); --dv; }
        while (u != v) { u = parent(u); v = parent(v); }
        return u;
    }

    long long tree_distance(int u, int v) const {
        int a = lca(u, v);
        return (depth(u) - depth(a)) + (depth(v) - depth(a));
    }
};

CompleteBinaryTree build_binary_tree(int h, long long vertex_budget = kDefaultVertexBudget);

// no member is an ancestor of another (equivalently: leaf intervals disjoint)
bool is_unrelated(const CompleteBinaryTree& t, const VertexSet& b);

// b sorted by the ordered-tree order; requires is_unrelated(b)
std::vector<int> left_to_right_order(const CompleteBinaryTree& t, const VertexSet& b);

// the tree edges as a Graph on the same ids
Graph tree_as_graph(const CompleteBinaryTree& t);

// max tree distance over pairs of r (two-sweep; exact for tree metrics)
long long tree_diameter_of_subset(const CompleteBinaryTree& t, const VertexSet& r);

} // namespace psw

#endif
