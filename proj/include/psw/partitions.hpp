#ifndef PSW_PARTITIONS_HPP
#define PSW_PARTITIONS_HPP

#include <utility>
#include <vector>

#include "psw/graph.hpp"

namespace psw {

// Partition of a subject graph's vertices indexed by the vertices of a host
// graph. Valid when every subject edge stays inside a part or crosses a host
// edge. Empty parts are allowed so hosts can be fixed independently.
struct HPartition {
    Graph host;
    std::vector<VertexSet> parts; // indexed by host vertex
    int subject_vertex_count = 0;
    std::vector<int> part_of; // subject vertex -> host vertex

    const VertexSet& part(int x) const { return parts[x]; }
};

// Checks disjoint cover (NotAPartition otherwise) and fills part_of.
HPartition make_hpartition(Graph host, std::vector<VertexSet> parts, int subject_n);

// Violating subject edges, sorted; empty list means valid.
std::vector<std::pair<int, int>> validate_hpartition(const Graph& g, const HPartition& p);

long long partition_width(const HPartition& p);

// Ordered partition into layers; every edge stays within a layer or joins
// consecutive layers.
struct Layering {
    std::vector<VertexSet> layers;
    int subject_vertex_count = 0;
    std::vector<int> layer_of;

    int layer_count() const { return static_cast<int>(layers.size()); }
};

Layering make_layering(std::vector<VertexSet> layers, int subject_n);
std::vector<std::pair<int, int>> validate_layering(const Graph& g, const Layering& lay);

// layer k = vertices at distance k from root; Disconnected if not spanning
Layering bfs_layering(const Graph& g, int root);

// A layer maximizing |r ∩ layer| (smallest index on ties) and the exact
// count. The count is always >= |r| / (diam_G(r)+1).
std::pair<int, long long> diameter_spread(const Graph& g, const VertexSet& r, const Layering& lay);

bool host_is_tree(const Graph& host);

// For a tree-partition tp and v,w in N_G(B_x) lying in one component of
// G - B_x, the unique host neighbor y of x with v,w in B_y.
int shared_neighbor_bag(const Graph& g, const HPartition& tp, int x, int v, int w);

// Given an H-partition of g and a tree-partition of H, the induced
// tree-partition of g (part at tree node u = union of B_x over x in the
// part of H at u). Width multiplies. Empty unions stay as empty parts.
HPartition compose_tree_partition(const Graph& g, const HPartition& hp, const HPartition& tp);

} // namespace psw

#endif
