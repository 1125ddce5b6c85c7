#ifndef PSW_PRODUCTS_HPP
#define PSW_PRODUCTS_HPP

#include <tuple>
#include <vector>

#include "psw/graph.hpp"
#include "psw/partitions.hpp"

namespace psw {

// Strong product: (v,x) ~ (w,y) iff vw is an edge and x = y, or v = w and
// xy is an edge, or both coordinates move along edges.
struct StrongProduct {
    Graph graph;
    int n1 = 0;
    int n2 = 0;

    int id(int v, int x) const { return v * n2 + x; }
    std::pair<int, int> coords(int p) const { return {p / n2, p % n2}; }
};

StrongProduct strong_product(const Graph& g1, const Graph& g2,
                             long long vertex_budget = kDefaultVertexBudget);

// Injective map witnessing G ⊑ H ⊠ P ⊠ K_c, with P kept as a length.
struct ProductEmbedding {
    Graph factor_h;
    int factor_p_length = 0;
    int clique_size = 1;

    struct Coord {
        int h = 0;
        int p = 0;
        int k = 0;
        bool operator==(const Coord&) const = default;
    };
    std::vector<Coord> map; // subject vertex -> coordinates
};

// Empty list iff e is a valid embedding of g (injective, coordinates in
// range, every edge carried to a product edge).
std::vector<std::string> validate_embedding(const Graph& g, const ProductEmbedding& e);

// Clique slots are assigned in sorted-id order within each cell B_x ∩ P_y.
// CellTooLarge when some cell exceeds c.
ProductEmbedding partitions_to_embedding(const Graph& g, const HPartition& hp,
                                         const Layering& lay, int c);

// Inverse direction: parts and layers as coordinate preimages.
std::tuple<HPartition, Layering, int> embedding_to_partitions(const Graph& g,
                                                              const ProductEmbedding& e);

} // namespace psw

#endif
