#include "psw/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace psw {

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edge_list) {
    require(n >= 0, "MalformedEdge", "negative vertex count");
    for (auto& [u, v] : edge_list) {
        require(u >= 0 && u < n && v >= 0 && v < n, "MalformedEdge",
                "endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        require(u != v, "MalformedEdge", "self-loop at " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (std::size_t i = 1; i < edge_list.size(); ++i) {
        require(edge_list[i] != edge_list[i - 1], "MalformedEdge",
                "duplicate edge (" + std::to_string(edge_list[i].first) + "," +
                    std::to_string(edge_list[i].second) + ")");
    }

    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (auto& [u, v] : g.edges) { deg[u + 1]++; deg[v + 1]++; }
    g.off.resize(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) g.off[i + 1] = g.off[i] + deg[i + 1];
    g.adj.resize(g.off[n]);
    std::vector<std::size_t> cur(g.off.begin(), g.off.end() - 1);
    for (auto& [u, v] : g.edges) {
        g.adj[cur[u]++] = v;
        g.adj[cur[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.adj.begin() + static_cast<long>(g.off[v]), g.adj.begin() + static_cast<long>(g.off[v + 1]));
    return g;
}

std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed) {
    for (Vertex v : removed)
        require(v >= 0 && v < g.n, "PreconditionFailed", "removed vertex out of range");
    std::vector<char> blocked(g.n, 0);
    for (Vertex v : removed) blocked[v] = 1;

    std::vector<VertexSet> out;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (blocked[s] || seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!blocked[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    // components are discovered from their smallest member in increasing order
    return out;
}

std::vector<long long> bfs_distances(const Graph& g, int src) {
    std::vector<long long> dist(g.n, -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<long long> diameter_of_subset(const Graph& g, const VertexSet& r) {
    require(!r.empty(), "EmptySubset", "diameter of empty subset");
    for (Vertex v : r)
        require(v >= 0 && v < g.n, "PreconditionFailed", "subset vertex out of range");
    long long best = 0;
    for (Vertex v : r) {
        auto dist = bfs_distances(g, v);
        for (Vertex w : r) {
            if (dist[w] < 0) return std::nullopt;
            best = std::max(best, dist[w]);
        }
    }
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.to_old = keep;
    out.to_new.assign(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        require(keep[i] >= 0 && keep[i] < g.n, "PreconditionFailed", "kept vertex out of range");
        out.to_new[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (auto& [u, v] : g.edges) {
        if (out.to_new[u] >= 0 && out.to_new[v] >= 0)
            es.emplace_back(out.to_new[u], out.to_new[v]);
    }
    out.graph = build_graph(static_cast<int>(keep.size()), std::move(es));
    return out;
}

Graph read_edge_list(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m)) fail("MalformedEdge", "edge list header missing");
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) fail("MalformedEdge", "truncated edge list");
        require(u < v, "MalformedEdge", "edge list requires u < v");
        es.emplace_back(u, v);
    }
    return build_graph(n, std::move(es));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n << " " << g.edge_count() << "\n";
    for (auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "MalformedEdge", "cannot open " + path);
    return read_edge_list(in);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return build_graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    if (n >= 3) es.emplace_back(0, n - 1);
    return build_graph(n, std::move(es));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return build_graph(n, std::move(es));
}

} // namespace psw
