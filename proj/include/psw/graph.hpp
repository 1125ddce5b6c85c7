#ifndef PSW_GRAPH_HPP
#define PSW_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psw/errors.hpp"

namespace psw {

constexpr long long kDefaultVertexBudget = 1LL << 25;

using Vertex = int;

// Sorted set of vertex ids. Kept as a plain sorted vector; helpers below.
using VertexSet = std::vector<Vertex>;

bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
bool set_subset(const VertexSet& a, const VertexSet& b); // a subset of b
VertexSet sorted_unique(std::vector<Vertex> v);

// Immutable simple undirected graph. Vertices are dense ids 0..n-1,
// adjacency is CSR with sorted neighbor lists, edges canonical (u < v).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> adj;
    std::vector<std::size_t> off;

    long long edge_count() const { return static_cast<long long>(edges.size()); }

    std::span<const int> neighbors(int v) const {
        return {adj.data() + off[v], adj.data() + off[v + 1]};
    }
    int degree(int v) const { return static_cast<int>(off[v + 1] - off[v]); }
    bool has_edge(int u, int v) const;
    int max_degree() const;
};

// Canonicalizes and validates; rejects out-of-range ids, self-loops and
// duplicate edges with MalformedEdge.
Graph build_graph(int n, std::vector<std::pair<int, int>> edge_list);

// Connected components of g - removed, sorted by smallest member.
std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed);

// Max over pairs in r of dist_G; nullopt when some pair is disconnected.
// Breadth-first from every member, so quadratic-ish; fine for small r.
std::optional<long long> diameter_of_subset(const Graph& g, const VertexSet& r);

// BFS distances from src, -1 for unreachable.
std::vector<long long> bfs_distances(const Graph& g, int src);

// Vertex-induced subgraph with the old<->new id tables kept explicit.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old; // new id -> old id
    std::vector<int> to_new; // old id -> new id, -1 if dropped
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Edge-list text format: "n m" then m lines "u v" with u < v, 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph load_edge_list(const std::string& path);

// Small builders used all over the tests and oracles.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

} // namespace psw

#endif
