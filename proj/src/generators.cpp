#include "psw/generators.hpp"

#include <string>

namespace psw {

GhGraph build_gh(int h, long long vertex_budget) {
    require(h >= 1, "PreconditionFailed", "G_h needs h >= 1");
    CompleteBinaryTree t = build_binary_tree(h, vertex_budget);
    long long n = t.vertex_count();

    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>((1LL << (h + 2)) - h - 4));
    for (long long v = 1; v < n; ++v)
        es.emplace_back((static_cast<int>(v) - 1) / 2, static_cast<int>(v));
    for (int i = 1; i <= h; ++i) {
        int first = t.level_first(i), last = t.level_last(i);
        for (int v = first; v < last; ++v) es.emplace_back(v, v + 1);
    }

    GhGraph gh;
    gh.tree = t;
    gh.graph = build_graph(static_cast<int>(n), std::move(es));
    return gh;
}

SubdividedGrid build_subdivided_grid(int x, int y, const std::vector<int>& divisions,
                                     long long vertex_budget) {
    require(x >= 1 && y >= 1, "PreconditionFailed", "grid needs x,y >= 1");
    require(divisions.size() == static_cast<std::size_t>(x - 1) * y, "PreconditionFailed",
            "divisions must have (x-1)*y entries");
    long long total = static_cast<long long>(x) * y;
    for (int d : divisions) {
        require(d >= 0, "PreconditionFailed", "negative division count");
        total += d;
    }
    require(total <= vertex_budget, "HeightTooLarge", "grid exceeds the vertex budget");

    SubdividedGrid sg;
    sg.x = x;
    sg.y = y;
    sg.chains.resize(divisions.size());

    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < x; ++i)
        for (int j = 0; j + 1 < y; ++j) es.emplace_back(i * y + j, i * y + j + 1);

    int next = x * y;
    for (int i = 0; i + 1 < x; ++i) {
        for (int j = 0; j < y; ++j) {
            int d = divisions[i * y + j];
            int prev = i * y + j;
            auto& chain = sg.chains[i * y + j];
            for (int k = 0; k < d; ++k) {
                chain.push_back(next);
                es.emplace_back(prev, next);
                prev = next++;
            }
            es.emplace_back(prev, (i + 1) * y + j);
        }
    }
    sg.graph = build_graph(next, std::move(es));
    return sg;
}

Graph plain_grid(int x, int y) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < x; ++i)
        for (int j = 0; j + 1 < y; ++j) es.emplace_back(i * y + j, i * y + j + 1);
    for (int i = 0; i + 1 < x; ++i)
        for (int j = 0; j < y; ++j) es.emplace_back(i * y + j, (i + 1) * y + j);
    return build_graph(x * y, std::move(es));
}

Graph contract_chains(const SubdividedGrid& sg) {
    std::vector<std::pair<int, int>> es;
    int x = sg.x, y = sg.y;
    for (int i = 0; i < x; ++i)
        for (int j = 0; j + 1 < y; ++j) es.emplace_back(i * y + j, i * y + j + 1);
    for (int i = 0; i + 1 < x; ++i)
        for (int j = 0; j < y; ++j) es.emplace_back(i * y + j, (i + 1) * y + j);
    return build_graph(x * y, std::move(es));
}

} // namespace psw
