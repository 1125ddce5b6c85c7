#include "psw/partitions.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace psw {

HPartition make_hpartition(Graph host, std::vector<VertexSet> parts, int subject_n) {
    require(parts.size() == static_cast<std::size_t>(host.n), "NotAPartition",
            "need one part per host vertex");
    HPartition p;
    p.host = std::move(host);
    p.parts = std::move(parts);
    p.subject_vertex_count = subject_n;
    p.part_of.assign(subject_n, -1);
    long long covered = 0;
    for (int x = 0; x < p.host.n; ++x) {
        for (Vertex v : p.parts[x]) {
            require(v >= 0 && v < subject_n, "NotAPartition",
                    "part vertex out of range: " + std::to_string(v));
            require(p.part_of[v] < 0, "NotAPartition",
                    "vertex in two parts: " + std::to_string(v));
            p.part_of[v] = x;
            ++covered;
        }
        if (!std::is_sorted(p.parts[x].begin(), p.parts[x].end()))
            std::sort(p.parts[x].begin(), p.parts[x].end());
    }
    require(covered == subject_n, "NotAPartition", "parts do not cover the subject");
    return p;
}

std::vector<std::pair<int, int>> validate_hpartition(const Graph& g, const HPartition& p) {
    require(p.subject_vertex_count == g.n, "NotAPartition",
            "partition is over a different vertex count");
    std::vector<std::pair<int, int>> bad;
    for (auto& [u, v] : g.edges) {
        int x = p.part_of[u], y = p.part_of[v];
        if (x == y) continue;
        if (!p.host.has_edge(x, y)) bad.emplace_back(u, v);
    }
    return bad; // g.edges is sorted, so the violation list is too
}

long long partition_width(const HPartition& p) {
    std::size_t w = 0;
    for (auto& part : p.parts) w = std::max(w, part.size());
    return static_cast<long long>(w);
}

Layering make_layering(std::vector<VertexSet> layers, int subject_n) {
    Layering lay;
    lay.layers = std::move(layers);
    lay.subject_vertex_count = subject_n;
    lay.layer_of.assign(subject_n, -1);
    long long covered = 0;
    for (int i = 0; i < lay.layer_count(); ++i) {
        for (Vertex v : lay.layers[i]) {
            require(v >= 0 && v < subject_n, "NotAPartition", "layer vertex out of range");
            require(lay.layer_of[v] < 0, "NotAPartition", "vertex in two layers");
            lay.layer_of[v] = i;
            ++covered;
        }
        if (!std::is_sorted(lay.layers[i].begin(), lay.layers[i].end()))
            std::sort(lay.layers[i].begin(), lay.layers[i].end());
    }
    require(covered == subject_n, "NotAPartition", "layers do not cover the subject");
    return lay;
}

std::vector<std::pair<int, int>> validate_layering(const Graph& g, const Layering& lay) {
    require(lay.subject_vertex_count == g.n, "NotAPartition",
            "layering is over a different vertex count");
    std::vector<std::pair<int, int>> bad;
    for (auto& [u, v] : g.edges) {
        if (std::abs(lay.layer_of[u] - lay.layer_of[v]) > 1) bad.emplace_back(u, v);
    }
    return bad;
}

Layering bfs_layering(const Graph& g, int root) {
    require(root >= 0 && root < g.n, "PreconditionFailed", "root out of range");
    auto dist = bfs_distances(g, root);
    long long far = 0;
    for (int v = 0; v < g.n; ++v) {
        require(dist[v] >= 0, "Disconnected", "vertex " + std::to_string(v) + " unreachable");
        far = std::max(far, dist[v]);
    }
    std::vector<VertexSet> layers(static_cast<std::size_t>(far) + 1);
    for (int v = 0; v < g.n; ++v) layers[dist[v]].push_back(v);
    return make_layering(std::move(layers), g.n);
}

std::pair<int, long long> diameter_spread(const Graph& g, const VertexSet& r, const Layering& lay) {
    require(!r.empty(), "EmptySubset", "spread of empty subset");
    require(lay.subject_vertex_count == g.n, "NotAPartition", "layering/graph mismatch");
    std::vector<long long> count(lay.layer_count(), 0);
    for (Vertex v : r) count[lay.layer_of[v]]++;
    int best = 0;
    for (int i = 1; i < lay.layer_count(); ++i)
        if (count[i] > count[best]) best = i;
    return {best, count[best]};
}

bool host_is_tree(const Graph& host) {
    if (host.n == 0) return false;
    if (host.edge_count() != host.n - 1) return false;
    auto d = bfs_distances(host, 0);
    for (int v = 0; v < host.n; ++v)
        if (d[v] < 0) return false;
    return true;
}

int shared_neighbor_bag(const Graph& g, const HPartition& tp, int x, int v, int w) {
    require(host_is_tree(tp.host), "PreconditionFailed", "host is not a tree");
    require(validate_hpartition(g, tp).empty(), "PreconditionFailed", "invalid tree-partition");
    require(x >= 0 && x < tp.host.n, "PreconditionFailed", "host node out of range");
    const VertexSet& bx = tp.parts[x];

    auto in_neighborhood = [&](int u) {
        if (set_contains(bx, u)) return false;
        for (int nb : g.neighbors(u))
            if (set_contains(bx, nb)) return true;
        return false;
    };
    require(in_neighborhood(v) && in_neighborhood(w), "PreconditionFailed",
            "vertices not in N_G(B_x)");

    auto comps = components_avoiding(g, bx);
    int cv = -1, cw = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (set_contains(comps[i], v)) cv = static_cast<int>(i);
        if (set_contains(comps[i], w)) cw = static_cast<int>(i);
    }
    require(cv == cw && cv >= 0, "PreconditionFailed",
            "vertices not in one component of G - B_x");

    int y = tp.part_of[v];
    require(y == tp.part_of[w], "PreconditionFailed",
            "tree-partition places v and w in different bags despite the hypothesis");
    require(tp.host.has_edge(x, y), "PreconditionFailed", "bag is not adjacent to x");
    return y;
}

HPartition compose_tree_partition(const Graph& g, const HPartition& hp, const HPartition& tp) {
    require(tp.subject_vertex_count == hp.host.n, "HostMismatch",
            "tree-partition must partition the H-partition's host");
    require(validate_hpartition(g, hp).empty(), "HostMismatch", "invalid H-partition of g");
    require(validate_hpartition(hp.host, tp).empty(), "HostMismatch", "invalid partition of H");
    require(host_is_tree(tp.host), "HostMismatch", "outer host is not a tree");

    std::vector<VertexSet> parts(tp.host.n);
    for (int u = 0; u < tp.host.n; ++u) {
        std::vector<Vertex> acc;
        for (int x : tp.parts[u])
            acc.insert(acc.end(), hp.parts[x].begin(), hp.parts[x].end());
        parts[u] = sorted_unique(std::move(acc));
    }
    return make_hpartition(tp.host, std::move(parts), g.n);
}

} // namespace psw
