#ifndef PSW_ORACLE_HPP
#define PSW_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "psw/generators.hpp"
#include "psw/graph.hpp"
#include "psw/partitions.hpp"
#include "psw/products.hpp"

namespace psw {

// ---------------- exact minimum clique factor ----------------

struct MinProductC {
    int c = 0;
    HPartition tp;
    Layering lay;
    ProductEmbedding embedding;
};

// Minimum c with g ⊑ T ⊠ P ⊠ K_c over trees with at most max_tree_vertices
// nodes and paths of length at most max_path_length, by exhaustive search
// over (tree-partition, layering) pairs. Guarded to |V| <= 8.
MinProductC min_product_c(const Graph& g, int max_tree_vertices, int max_path_length);

// Minimum-width tree-partition of a tiny graph (host returned inside).
HPartition min_width_tree_partition(const Graph& g);

// ---------------- separators and treewidth ----------------

// All inclusion-minimal balanced separators of G_h with |s| <= max_size.
// h <= 5 guarded; subset enumeration capped by enum_budget.
std::vector<VertexSet> minimal_balanced_separators(const GhGraph& gh, int max_size,
                                                   long long enum_budget = 200'000'000);

// Exact treewidth by elimination-order DP over subsets; |V| <= 8 guarded.
long long exact_treewidth_tiny(const Graph& g);

// ---------------- lemma sweeps ----------------

struct SweepParams {
    int height = 3;
    bool exhaustive = true;
    long long samples = 10'000;
    std::uint64_t seed = 42;
    // lemma 7 controls
    int x_max = 5;
    int y_max = 5;
    int division_max = 3;
    int p_max = 5;
    // lemma 9 controls
    int max_sep_size = 7;
    // lemma 11 controls
    long long families = 1'000;
};

struct SweepReport {
    int lemma = 0;
    long long instances = 0;
    long long failures = 0;
    std::vector<std::string> failure_notes;       // first few, for diagnosis
    std::vector<std::vector<long long>> rows;     // per-instance CSV rows
    std::vector<std::string> row_header;
    std::map<std::string, long long> extremes;
};

// Runs the named lemma's operation over exhaustive or sampled admissible
// inputs and validates every postcondition with independent primitives.
// lemma in {5, 6, 7, 9, 11}.
SweepReport exhaustive_lemma_sweep(int lemma, const SweepParams& params);

} // namespace psw

#endif
