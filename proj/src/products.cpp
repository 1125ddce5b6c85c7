#include "psw/products.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace psw {

StrongProduct strong_product(const Graph& g1, const Graph& g2, long long vertex_budget) {
    require(g1.n >= 1 && g2.n >= 1, "PreconditionFailed", "factors must be nonempty");
    long long n = static_cast<long long>(g1.n) * g2.n;
    require(n <= vertex_budget, "HeightTooLarge", "product exceeds the vertex budget");

    StrongProduct pr;
    pr.n1 = g1.n;
    pr.n2 = g2.n;
    std::vector<std::pair<int, int>> es;
    // vw edge, same second coordinate
    for (auto& [v, w] : g1.edges)
        for (int x = 0; x < g2.n; ++x) es.emplace_back(pr.id(v, x), pr.id(w, x));
    // same first coordinate, xy edge
    for (int v = 0; v < g1.n; ++v)
        for (auto& [x, y] : g2.edges) es.emplace_back(pr.id(v, x), pr.id(v, y));
    // both move
    for (auto& [v, w] : g1.edges)
        for (auto& [x, y] : g2.edges) {
            es.emplace_back(pr.id(v, x), pr.id(w, y));
            es.emplace_back(pr.id(v, y), pr.id(w, x));
        }
    pr.graph = build_graph(static_cast<int>(n), std::move(es));
    return pr;
}

std::vector<std::string> validate_embedding(const Graph& g, const ProductEmbedding& e) {
    std::vector<std::string> bad;
    if (e.map.size() != static_cast<std::size_t>(g.n)) {
        bad.push_back("map does not cover the subject");
        return bad;
    }
    std::map<std::tuple<int, int, int>, int> seen;
    for (int v = 0; v < g.n; ++v) {
        auto [h, p, k] = e.map[v];
        if (h < 0 || h >= e.factor_h.n || p < 0 || p > e.factor_p_length || k < 0 ||
            k >= e.clique_size) {
            bad.push_back("coordinates of vertex " + std::to_string(v) + " out of range");
            continue;
        }
        auto key = std::make_tuple(h, p, k);
        auto [it, fresh] = seen.emplace(key, v);
        if (!fresh)
            bad.push_back("vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                          " share coordinates");
    }
    auto factor_ok = [&](int a, int b, bool edge) { return a == b || edge; };
    for (auto& [u, v] : g.edges) {
        auto a = e.map[u];
        auto b = e.map[v];
        bool h_ok = factor_ok(a.h, b.h, e.factor_h.has_edge(a.h, b.h));
        bool p_ok = factor_ok(a.p, b.p, std::abs(a.p - b.p) == 1);
        bool k_ok = factor_ok(a.k, b.k, a.k != b.k); // clique: distinct slots are adjacent
        bool all_equal = a == b;
        if (!(h_ok && p_ok && k_ok) || all_equal)
            bad.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") not carried to a product edge");
    }
    return bad;
}

ProductEmbedding partitions_to_embedding(const Graph& g, const HPartition& hp,
                                         const Layering& lay, int c) {
    require(c >= 1, "PreconditionFailed", "clique size must be positive");
    require(validate_hpartition(g, hp).empty(), "PreconditionFailed", "invalid H-partition");
    require(validate_layering(g, lay).empty(), "PreconditionFailed", "invalid layering");

    ProductEmbedding e;
    e.factor_h = hp.host;
    e.factor_p_length = std::max(0, lay.layer_count() - 1);
    e.clique_size = c;
    e.map.resize(g.n);

    // slot = rank of the vertex inside its cell, sorted-id order
    std::map<std::pair<int, int>, int> next_slot;
    for (int v = 0; v < g.n; ++v) { // ids ascend, so ranks follow sorted order
        int x = hp.part_of[v];
        int y = lay.layer_of[v];
        int slot = next_slot[{x, y}]++;
        if (slot >= c)
            fail("CellTooLarge", "cell (" + std::to_string(x) + "," + std::to_string(y) +
                                     ") has size " + std::to_string(slot + 1) + " > c=" +
                                     std::to_string(c));
        e.map[v] = {x, y, slot};
    }
    auto bad = validate_embedding(g, e);
    require(bad.empty(), "InvalidEmbedding", bad.empty() ? "" : bad.front());
    return e;
}

std::tuple<HPartition, Layering, int> embedding_to_partitions(const Graph& g,
                                                              const ProductEmbedding& e) {
    auto bad = validate_embedding(g, e);
    require(bad.empty(), "InvalidEmbedding", bad.empty() ? "" : bad.front());

    std::vector<VertexSet> parts(e.factor_h.n);
    std::vector<VertexSet> layers(static_cast<std::size_t>(e.factor_p_length) + 1);
    for (int v = 0; v < g.n; ++v) {
        parts[e.map[v].h].push_back(v);
        layers[e.map[v].p].push_back(v);
    }
    HPartition hp = make_hpartition(e.factor_h, std::move(parts), g.n);
    Layering lay = make_layering(std::move(layers), g.n);
    return {std::move(hp), std::move(lay), e.clique_size};
}

} // namespace psw
