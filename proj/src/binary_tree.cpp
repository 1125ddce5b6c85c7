#include "psw/binary_tree.hpp"

#include <algorithm>

namespace psw {

CompleteBinaryTree build_binary_tree(int h, long long vertex_budget) {
    require(h >= 0, "PreconditionFailed", "negative height");
    require(h < 62 && ((1LL << (h + 1)) - 1) <= vertex_budget, "HeightTooLarge",
            "2^(h+1)-1 exceeds the vertex budget for h=" + std::to_string(h));
    CompleteBinaryTree t;
    t.height = h;
    return t;
}

bool is_unrelated(const CompleteBinaryTree& t, const VertexSet& b) {
    for (Vertex v : b)
        require(t.valid_vertex(v), "PreconditionFailed", "vertex outside tree");
    std::vector<std::pair<long long, long long>> iv;
    iv.reserve(b.size());
    for (Vertex v : b) iv.push_back(t.leaf_interval(v));
    std::sort(iv.begin(), iv.end());
    for (std::size_t i = 1; i < iv.size(); ++i)
        if (iv[i].first <= iv[i - 1].second) return false;
    return true;
}

std::vector<int> left_to_right_order(const CompleteBinaryTree& t, const VertexSet& b) {
    require(is_unrelated(t, b), "NotUnrelated", "set has an ancestor pair");
    std::vector<int> out(b.begin(), b.end());
    std::sort(out.begin(), out.end(), [&](int u, int v) {
        return t.leaf_interval(u).first < t.leaf_interval(v).first;
    });
    return out;
}

Graph tree_as_graph(const CompleteBinaryTree& t) {
    std::vector<std::pair<int, int>> es;
    long long n = t.vertex_count();
    for (long long v = 1; v < n; ++v) es.emplace_back((static_cast<int>(v) - 1) / 2, static_cast<int>(v));
    return build_graph(static_cast<int>(n), std::move(es));
}

long long tree_diameter_of_subset(const CompleteBinaryTree& t, const VertexSet& r) {
    require(!r.empty(), "EmptySubset", "tree diameter of empty subset");
    auto farthest = [&](int from) {
        int best = from;
        long long bd = -1;
        for (Vertex v : r) {
            long long d = t.tree_distance(from, v);
            if (d > bd) { bd = d; best = v; }
        }
        return std::make_pair(best, bd);
    };
    auto [a, d0] = farthest(r.front());
    auto [b, d1] = farthest(a);
    (void)b;
    (void)d0;
    return d1;
}

} // namespace psw
