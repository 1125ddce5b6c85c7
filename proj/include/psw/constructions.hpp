#ifndef PSW_CONSTRUCTIONS_HPP
#define PSW_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psw/generators.hpp"
#include "psw/graph.hpp"
#include "psw/partitions.hpp"

namespace psw {

struct StructureVerdict {
    std::optional<bool> treewidth_le_2;
    std::optional<bool> outerplanar; // nullopt = unknown (above budget)
    std::vector<std::string> trace;  // reduction trace when it applies
    // forbidden-minor witness: a subdivision given as branch paths
    std::string minor_kind;          // "K4" | "K2,3" | ""
    std::vector<std::vector<int>> minor_paths;
};

// Partition of G_h into maximal left-child chains (one from the root, one
// from every right child), paired with the depth layering. Every chain
// descends one depth per step, so all cells have size <= 1. The quotient
// host is returned inside the HPartition for verification.
std::pair<HPartition, Layering> build_leftmost_path_partition(const GhGraph& gh);

// True iff repeated deletion of degree <= 1 vertices and bypassing of
// degree-2 vertices (dropping parallels) empties the graph; lowest-id
// eligible vertex first, trace recorded.
StructureVerdict treewidth_at_most_2(const Graph& g);

// Decides outerplanarity by forbidden-minor search: the degree-2 reduction
// decides K4, and three internally disjoint long paths between a vertex
// pair decide K2,3. Above the budget returns unknown.
StructureVerdict outerplanarity_check_small(const Graph& g, int budget = 1 << 10);

} // namespace psw

#endif
