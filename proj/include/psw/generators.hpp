#ifndef PSW_GENERATORS_HPP
#define PSW_GENERATORS_HPP

#include <utility>
#include <vector>

#include "psw/binary_tree.hpp"
#include "psw/graph.hpp"

namespace psw {

// Complete binary tree of height h plus, for each depth i >= 1, a path D_i
// through the depth-i vertices in left-to-right order. Since depth-i ids are
// the contiguous range [2^i - 1, 2^{i+1} - 2], each D_i is implicit.
struct GhGraph {
    CompleteBinaryTree tree;
    Graph graph;

    int height() const { return tree.height; }
    // D_i as an inclusive id range [first, last], left to right
    std::pair<int, int> level_path(int i) const {
        return {tree.level_first(i), tree.level_last(i)};
    }
    int depth_of(int v) const { return tree.depth(v); }
};

GhGraph build_gh(int h, long long vertex_budget = kDefaultVertexBudget);

// x*y grid whose horizontal edges may be subdivided; vertical edges never
// are. Grid vertex (col i, row j) has id i*y + j; subdivision vertices
// follow, chain by chain.
struct SubdividedGrid {
    int x = 0;
    int y = 0;
    Graph graph;
    // chains[(i)*y + j] lists the subdivision ids on the horizontal edge
    // between (i,j) and (i+1,j), ordered from column i to column i+1
    std::vector<std::vector<int>> chains;

    int grid_id(int col, int row) const { return col * y + row; }
    bool is_grid_vertex(int v) const { return v < x * y; }
    const std::vector<int>& chain(int col, int row) const { return chains[col * y + row]; }
};

// divisions has (x-1)*y entries indexed [(i)*y + j]; 0 keeps the edge
SubdividedGrid build_subdivided_grid(int x, int y, const std::vector<int>& divisions,
                                     long long vertex_budget = kDefaultVertexBudget);

Graph plain_grid(int x, int y);

// contract every subdivision chain back to a single edge (test oracle)
Graph contract_chains(const SubdividedGrid& sg);

} // namespace psw

#endif
