#include "psw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "psw/percolation.hpp"
#include "psw/rational.hpp"
#include "psw/rng.hpp"
#include "psw/witness.hpp"

namespace psw {

namespace {

// restricted growth strings enumerate set partitions once each
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == n) {
            fn(a, maxv + 1);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (n == 0) return;
    a[0] = 0;
    rec(1, 0);
}

// quotient edges of a partition given by labels; true iff it is a forest
bool quotient_forest(const Graph& g, const std::vector<int>& label, int parts,
                     std::set<std::pair<int, int>>& edges_out) {
    edges_out.clear();
    std::vector<int> uf(parts);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };
    for (auto& [u, v] : g.edges) {
        int a = label[u], b = label[v];
        if (a == b) continue;
        auto e = std::minmax(a, b);
        if (edges_out.insert({e.first, e.second}).second) {
            int ra = find(a), rb = find(b);
            if (ra == rb) return false;
            uf[ra] = rb;
        }
    }
    return true;
}

// connect a forest on `parts` nodes into a tree
Graph forest_to_tree(int parts, const std::set<std::pair<int, int>>& forest_edges) {
    std::vector<int> uf(parts);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };
    std::vector<std::pair<int, int>> es(forest_edges.begin(), forest_edges.end());
    for (auto& [a, b] : es) uf[find(a)] = find(b);
    // chain the remaining components onto node 0
    for (int v = 1; v < parts; ++v) {
        if (find(v) != find(0)) {
            es.emplace_back(0, v);
            uf[find(v)] = find(0);
        }
    }
    return build_graph(parts, std::move(es));
}

// all layerings as normalized position vectors (min position = 0)
std::vector<std::vector<int>> enumerate_layerings(const Graph& g, int max_path_length,
                                                  long long budget = 5'000'000) {
    int n = g.n;
    std::vector<std::vector<int>> out;
    if (n == 0) return out;

    // BFS orders per component; every later vertex has an assigned neighbor
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> orders;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> order{s};
        comp[s] = static_cast<int>(orders.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : g.neighbors(order[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    order.push_back(w);
                }
        orders.push_back(std::move(order));
    }

    std::vector<int> f(n, 0);
    std::set<std::vector<int>> seen;
    long long steps = 0;

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t ci, std::size_t oi) {
        require(++steps < budget, "BudgetExceeded", "layering enumeration too large");
        if (ci == orders.size()) {
            int lo = *std::min_element(f.begin(), f.end());
            int hi = *std::max_element(f.begin(), f.end());
            if (hi - lo > max_path_length) return;
            std::vector<int> norm(n);
            for (int v = 0; v < n; ++v) norm[v] = f[v] - lo;
            if (seen.insert(norm).second) out.push_back(std::move(norm));
            return;
        }
        const auto& order = orders[ci];
        if (oi == order.size()) {
            rec(ci + 1, 0);
            return;
        }
        int v = order[oi];
        if (oi == 0) {
            if (ci == 0) {
                f[v] = 0;
                rec(ci, 1);
            } else {
                for (int off = -n; off <= n; ++off) {
                    f[v] = off;
                    rec(ci, 1);
                }
            }
            return;
        }
        // candidate positions come from any assigned neighbor
        int base = 0;
        bool found = false;
        for (int w : g.neighbors(v)) {
            for (std::size_t j = 0; j < oi; ++j)
                if (order[j] == w) {
                    base = f[w];
                    found = true;
                    break;
                }
            if (found) break;
        }
        for (int cand = base - 1; cand <= base + 1; ++cand) {
            bool ok = true;
            for (int w : g.neighbors(v)) {
                bool assigned = comp[w] < comp[v] || (comp[w] == comp[v] && [&] {
                                    for (std::size_t j = 0; j < oi; ++j)
                                        if (order[j] == w) return true;
                                    return false;
                                }());
                if (assigned && std::abs(f[w] - cand) > 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            f[v] = cand;
            rec(ci, oi + 1);
        }
    };
    rec(0, 0);
    return out;
}

Layering layering_from_positions(const Graph& g, const std::vector<int>& f) {
    int hi = *std::max_element(f.begin(), f.end());
    std::vector<VertexSet> layers(static_cast<std::size_t>(hi) + 1);
    for (int v = 0; v < g.n; ++v) layers[f[v]].push_back(v);
    return make_layering(std::move(layers), g.n);
}

} // namespace

MinProductC min_product_c(const Graph& g, int max_tree_vertices, int max_path_length) {
    require(g.n >= 1 && g.n <= 8, "BudgetExceeded", "min_product_c is guarded to 8 vertices");
    auto layerings = enumerate_layerings(g, max_path_length);
    require(!layerings.empty(), "BudgetExceeded", "no layering fits the path budget");

    int best_c = g.n + 1;
    std::vector<int> best_label;
    int best_parts = 0;
    std::set<std::pair<int, int>> best_forest;
    std::vector<int> best_f;

    std::set<std::pair<int, int>> forest;
    for_each_set_partition(g.n, [&](const std::vector<int>& label, int parts) {
        if (parts > max_tree_vertices) return;
        if (!quotient_forest(g, label, parts, forest)) return;
        for (const auto& f : layerings) {
            // max cell over (part, layer)
            std::map<std::pair<int, int>, int> cell;
            int worst = 0;
            for (int v = 0; v < g.n; ++v)
                worst = std::max(worst, ++cell[{label[v], f[v]}]);
            if (worst < best_c) {
                best_c = worst;
                best_label = label;
                best_parts = parts;
                best_forest = forest;
                best_f = f;
            }
        }
    });
    require(best_c <= g.n, "BudgetExceeded", "no valid pair found within the budgets");

    MinProductC out;
    out.c = best_c;
    std::vector<VertexSet> parts(best_parts);
    for (int v = 0; v < g.n; ++v) parts[best_label[v]].push_back(v);
    out.tp = make_hpartition(forest_to_tree(best_parts, best_forest), std::move(parts), g.n);
    out.lay = layering_from_positions(g, best_f);
    out.embedding = partitions_to_embedding(g, out.tp, out.lay, best_c);
    return out;
}

HPartition min_width_tree_partition(const Graph& g) {
    require(g.n >= 1 && g.n <= 8, "BudgetExceeded", "guarded to 8 vertices");
    long long best_w = g.n + 1;
    std::vector<int> best_label;
    int best_parts = 0;
    std::set<std::pair<int, int>> best_forest;

    std::set<std::pair<int, int>> forest;
    for_each_set_partition(g.n, [&](const std::vector<int>& label, int parts) {
        if (!quotient_forest(g, label, parts, forest)) return;
        std::vector<long long> size(parts, 0);
        long long w = 0;
        for (int v = 0; v < g.n; ++v) w = std::max(w, ++size[label[v]]);
        if (w < best_w) {
            best_w = w;
            best_label = label;
            best_parts = parts;
            best_forest = forest;
        }
    });
    std::vector<VertexSet> parts(best_parts);
    for (int v = 0; v < g.n; ++v) parts[best_label[v]].push_back(v);
    return make_hpartition(forest_to_tree(best_parts, best_forest), std::move(parts), g.n);
}

std::vector<VertexSet> minimal_balanced_separators(const GhGraph& gh, int max_size,
                                                   long long enum_budget) {
    int h = gh.height();
    require(h <= 5, "BudgetExceeded", "separator enumeration is guarded to h <= 5");
    const Graph& g = gh.graph;
    int n = g.n; // at most 63

    std::vector<std::uint64_t> adj(n, 0);
    for (auto& [u, v] : g.edges) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;

    auto balanced = [&](std::uint64_t removed) {
        std::uint64_t rest = all & ~removed;
        while (rest) {
            std::uint64_t comp = rest & (~rest + 1); // lowest remaining bit
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj[v];
                }
                frontier = next & rest & ~comp;
                comp |= frontier;
            }
            if (2 * std::popcount(comp) > n) return false;
            rest &= ~comp;
        }
        return true;
    };

    long long work = 0;
    for (int k = 1; k <= max_size; ++k) {
        // C(n, k) added to the budget estimate
        BigInt binom = 1;
        for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        work += static_cast<long long>(std::min<BigInt>(binom, BigInt(enum_budget)).convert_to<long long>());
    }
    require(work <= enum_budget, "BudgetExceeded", "subset enumeration exceeds the budget");

    std::vector<VertexSet> out;
    std::vector<int> idx;
    std::function<void(int, int, std::uint64_t)> rec = [&](int start, int left, std::uint64_t mask) {
        if (left == 0) {
            if (!balanced(mask)) return;
            for (int v : idx)
                if (balanced(mask & ~(1ULL << v))) return; // not inclusion-minimal
            out.emplace_back(idx);
            return;
        }
        for (int v = start; v <= n - left; ++v) {
            idx.push_back(v);
            rec(v + 1, left - 1, mask | (1ULL << v));
            idx.pop_back();
        }
    };
    for (int k = 1; k <= max_size; ++k) rec(0, k, 0);
    std::sort(out.begin(), out.end());
    return out;
}

long long exact_treewidth_tiny(const Graph& g) {
    require(g.n >= 1 && g.n <= 8, "BudgetExceeded", "exact treewidth is guarded to 8 vertices");
    int n = g.n;
    std::vector<std::uint32_t> adj(n, 0);
    for (auto& [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const std::uint32_t full = (1u << n) - 1;

    // degree of v at elimination time, when `eliminated` went first: the
    // uneliminated vertices adjacent to v or reachable from it through
    // eliminated ones
    auto q = [&](std::uint32_t eliminated, int v) {
        std::uint32_t reach = 1u << v;
        std::uint32_t frontier = reach;
        std::uint32_t boundary = 0;
        while (frontier) {
            std::uint32_t nb = 0;
            std::uint32_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                nb |= adj[u];
            }
            boundary |= nb & ~eliminated;
            frontier = (nb & eliminated) & ~reach;
            reach |= frontier;
        }
        return std::popcount(boundary & ~(1u << v));
    };

    std::vector<int> dp(1u << n, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int best = n;
        std::uint32_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            std::uint32_t rest = mask & ~(1u << v);
            best = std::min(best, std::max(dp[rest], q(rest, v)));
        }
        dp[mask] = best;
    }
    return dp[full];
}

// ---------------- lemma sweeps ----------------

namespace {

bool descending_path_ok(const CompleteBinaryTree& t, const std::vector<int>& path, int start,
                        const VertexSet& s) {
    if (path.empty() || path.front() != start) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i + 1] != t.left(path[i]) && path[i + 1] != t.right(path[i])) return false;
    if (!t.is_leaf(path.back())) return false;
    for (int v : path)
        if (set_contains(s, v)) return false;
    return true;
}

// independent escape validation with a reachability cross-check
bool escape_ok(const CompleteBinaryTree& t, const Graph& tree_g, const VertexSet& s,
               const Escape& e, long long depth_cap_pow) {
    if (e.vertex == 0) return false;
    if ((1LL << t.depth(e.vertex)) > depth_cap_pow) return false;
    int p = t.parent(e.vertex);
    if (p != 0 && !set_contains(s, p)) return false; // parent must be in s ∪ {root}
    if (!descending_path_ok(t, e.path, e.vertex, s)) return false;
    // cross-check: the tree minus s connects e.vertex to some leaf
    auto comps = components_avoiding(tree_g, s);
    for (auto& comp : comps) {
        if (!set_contains(comp, e.vertex)) continue;
        for (int v : comp)
            if (t.is_leaf(v)) return true;
        return false;
    }
    return false;
}

void note_failure(SweepReport& rep, const std::string& what) {
    rep.failures++;
    if (rep.failure_notes.size() < 20) rep.failure_notes.push_back(what);
}

SweepReport sweep_lemma5(const SweepParams& par) {
    SweepReport rep;
    rep.lemma = 5;
    rep.row_header = {"s_size", "depth", "depth_cap"};
    CompleteBinaryTree t = build_binary_tree(par.height);
    Graph tree_g = tree_as_graph(t);
    int n = static_cast<int>(t.vertex_count());
    long long smax = (1LL << par.height) - 1;

    auto run_one = [&](const VertexSet& s) {
        rep.instances++;
        Escape e = find_escape(t, s);
        long long cap = 2LL * static_cast<long long>(s.size());
        if (!escape_ok(t, tree_g, s, e, cap)) note_failure(rep, "escape check failed");
        long long d = t.depth(e.vertex);
        rep.rows.push_back({static_cast<long long>(s.size()), d,
                            floor_log2(BigInt(2 * static_cast<long long>(s.size())))});
        auto& worst = rep.extremes["max_depth"];
        worst = std::max(worst, d);
    };

    if (par.exhaustive) {
        require(n <= 20, "BudgetExceeded", "exhaustive sweep is guarded to 2^20 subsets");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (std::popcount(mask) > smax) continue;
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.push_back(v);
            run_one(s);
        }
    } else {
        Rng rng(par.seed);
        for (long long i = 0; i < par.samples; ++i) {
            int k = static_cast<int>(rand_int(rng, 1, smax));
            run_one(rand_subset(rng, n, k));
        }
    }
    return rep;
}

SweepReport sweep_lemma6(const SweepParams& par) {
    SweepReport rep;
    rep.lemma = 6;
    rep.row_header = {"s_size", "depth1", "depth2", "depth_cap"};
    CompleteBinaryTree t = build_binary_tree(par.height);
    Graph tree_g = tree_as_graph(t);
    int n = static_cast<int>(t.vertex_count());
    long long smax = (1LL << (par.height - 1)) - 1;
    require(smax >= 1, "PreconditionFailed", "lemma 6 sweep needs h >= 2");

    auto run_one = [&](const VertexSet& s) {
        rep.instances++;
        auto [e1, e2] = find_two_escapes(t, s);
        long long cap = 4LL * static_cast<long long>(s.size());
        if (!escape_ok(t, tree_g, s, e1, cap)) note_failure(rep, "first escape failed");
        if (!escape_ok(t, tree_g, s, e2, cap)) note_failure(rep, "second escape failed");
        if (!is_unrelated(t, sorted_unique({e1.vertex, e2.vertex})) || e1.vertex == e2.vertex)
            note_failure(rep, "escapes are related");
        rep.rows.push_back({static_cast<long long>(s.size()),
                            static_cast<long long>(t.depth(e1.vertex)),
                            static_cast<long long>(t.depth(e2.vertex)),
                            floor_log2(BigInt(4 * static_cast<long long>(s.size())))});
    };

    if (par.exhaustive) {
        require(n <= 20, "BudgetExceeded", "exhaustive sweep is guarded to 2^20 subsets");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (std::popcount(mask) > smax) continue;
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.push_back(v);
            run_one(s);
        }
    } else {
        Rng rng(par.seed);
        for (long long i = 0; i < par.samples; ++i) {
            int k = static_cast<int>(rand_int(rng, 1, smax));
            run_one(rand_subset(rng, n, k));
        }
    }
    return rep;
}

SweepReport sweep_lemma7(const SweepParams& par) {
    SweepReport rep;
    rep.lemma = 7;
    rep.row_header = {"x", "y", "p", "s_size", "run", "need"};
    Rng rng(par.seed);
    for (long long it = 0; it < par.samples; ++it) {
        int x = static_cast<int>(rand_int(rng, 1, par.x_max));
        int y = static_cast<int>(rand_int(rng, 1, par.y_max));
        int p = static_cast<int>(rand_int(rng, 1, par.p_max));
        std::vector<int> div(static_cast<std::size_t>(std::max(0, x - 1)) * y);
        for (auto& d : div) d = static_cast<int>(rand_int(rng, 0, par.division_max));
        SubdividedGrid sg = build_subdivided_grid(x, y, div);
        int subs = sg.graph.n - x * y;
        long long cap = std::min<long long>(subs, static_cast<long long>(p) * y - 1);
        int k = cap >= 0 ? static_cast<int>(rand_int(rng, 0, cap)) : 0;
        VertexSet s;
        for (int v : rand_subset(rng, subs, k)) s.push_back(x * y + v);

        rep.instances++;
        auto res = grid_connectivity(sg, s, Rational(p));
        long long run = res.col_hi - res.col_lo + 1;
        long long need = ceil_div(x, p);
        if (run < need) note_failure(rep, "interval shorter than ceil(x/p)");

        // brute-force cross-check of the component structure
        auto comps = components_avoiding(sg.graph, s);
        std::vector<int> comp_of(sg.graph.n, -1);
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
            for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);
        bool same = true;
        for (int i = res.col_lo; i <= res.col_hi; ++i)
            for (int j = 0; j < y; ++j)
                same = same && comp_of[sg.grid_id(i, j)] == comp_of[sg.grid_id(res.col_lo, 0)];
        if (!same) note_failure(rep, "interval columns not in one component");
        if (comps[comp_of[sg.grid_id(res.col_lo, 0)]] != res.component)
            note_failure(rep, "returned component mismatch");
        // the reported run must be the longest one
        long long best = 1, cur = 1;
        for (int i = 1; i < x; ++i) {
            cur = comp_of[sg.grid_id(i, 0)] == comp_of[sg.grid_id(i - 1, 0)] ? cur + 1 : 1;
            best = std::max(best, cur);
        }
        if (best != run) note_failure(rep, "interval is not the longest run");
        rep.rows.push_back({x, y, p, static_cast<long long>(s.size()), run, need});
    }
    return rep;
}

SweepReport sweep_lemma9(const SweepParams& par) {
    SweepReport rep;
    rep.lemma = 9;
    rep.row_header = {"s_size", "i0", "balanced", "pass"};
    GhGraph gh = build_gh(par.height);
    int n = gh.graph.n;
    require(n <= 63, "BudgetExceeded", "lemma 9 sweep is guarded to h <= 5");
    {
        BigInt work = 0, binom = 1;
        for (int k = 1; k <= par.max_sep_size; ++k) {
            binom = binom * (n - k + 1) / k;
            work += binom;
        }
        require(work <= 50'000'000, "BudgetExceeded", "subset enumeration exceeds the budget");
    }

    std::function<void(int, int, VertexSet&)> rec = [&](int start, int left, VertexSet& s) {
        if (left == 0) {
            rep.instances++;
            auto comps = components_avoiding(gh.graph, s);
            bool bal = true;
            for (auto& comp : comps) bal = bal && 2 * static_cast<long long>(comp.size()) <= n;
            if (!bal) return;
            auto sep = check_separator_depths(gh, s);
            if (!sep.pass) note_failure(rep, "balanced separator misses a level");
            long long corollary = std::max<long long>(0, par.height - sep.i0 + 1);
            if (static_cast<long long>(s.size()) < corollary)
                note_failure(rep, "size corollary violated");
            rep.rows.push_back({sep.s_size, sep.i0, 1, sep.pass ? 1LL : 0LL});
            return;
        }
        for (int v = start; v <= n - left; ++v) {
            s.push_back(v);
            rec(v + 1, left - 1, s);
            s.pop_back();
        }
    };
    VertexSet s;
    for (int k = 1; k <= par.max_sep_size; ++k) rec(0, k, s);
    return rep;
}

SweepReport sweep_lemma11(const SweepParams& par) {
    SweepReport rep;
    rep.lemma = 11;
    rep.row_header = {"h", "q", "k", "ell", "m", "s_size"};
    Rng rng(par.seed);
    CompleteBinaryTree t = build_binary_tree(par.height);
    int h = par.height;

    for (long long it = 0; rep.instances < par.families && it < 20 * par.families; ++it) {
        // anchors at one depth, elements at one relative depth below them;
        // same-depth sets are unrelated by construction
        int da = static_cast<int>(rand_int(rng, 0, std::max(0, h - 4)));
        int m = h - da;
        int dl = static_cast<int>(rand_int(rng, 0, std::min<long long>(2, m - 3)));
        int ell = dl;
        long long k = 1LL << static_cast<int>(rand_int(rng, 0, std::min(dl, 1)));
        k = std::min<long long>(k, 1LL << dl);
        long long limit = 1LL << (m - ell - 2); // family must fit below this
        long long qmax = std::min<long long>(t.level_size(da), (limit - 1) / std::max(1LL, k));
        if (qmax < 1) {
            continue;
        }
        long long q = rand_int(rng, 1, std::min<long long>(qmax, 6));

        CompactFamily fam;
        fam.tree_height = h;
        fam.k = k;
        fam.ell = ell;
        fam.m = m;
        auto anchor_pos = rand_subset(rng, static_cast<int>(t.level_size(da)), static_cast<int>(q));
        VertexSet everyone;
        for (int ap : anchor_pos) {
            int a = t.level_first(da) + ap;
            fam.anchors.push_back(a);
            // k distinct descendants at relative depth dl
            int base = a;
            for (int i = 0; i < dl; ++i) base = t.left(base);
            VertexSet part;
            for (int pos : rand_subset(rng, 1 << dl, static_cast<int>(k)))
                part.push_back(base + pos);
            everyone.insert(everyone.end(), part.begin(), part.end());
            fam.parts.push_back(std::move(part));
        }
        std::sort(everyone.begin(), everyone.end());

        // s contains the union plus random extras below the size limit
        VertexSet s = everyone;
        long long room = limit - 1 - static_cast<long long>(s.size());
        long long extra = room > 0 ? rand_int(rng, 0, std::min<long long>(room, 5)) : 0;
        for (long long i = 0; i < extra; ++i) {
            int v = static_cast<int>(rand_int(rng, 0, t.vertex_count() - 1));
            if (!set_contains(s, v)) s.insert(std::lower_bound(s.begin(), s.end(), v), v);
        }

        rep.instances++;
        if (!validate_compact(fam).empty()) {
            note_failure(rep, "generator produced an invalid family");
            continue;
        }
        GrownFamily grown = grow_compact(fam, s);
        auto bad = validate_compact(grown.family);
        if (!bad.empty()) note_failure(rep, "grown family invalid: " + bad.front());
        if (grown.family.k != 2 * fam.k || grown.family.ell !=
            fam.ell + ceil_log2(BigInt(static_cast<long long>(s.size()))) + 2)
            note_failure(rep, "grown parameters off");
        for (std::size_t pi = 0; pi < grown.family.parts.size(); ++pi) {
            if (grown.family.parts[pi].size() != 2 * fam.parts[pi].size())
                note_failure(rep, "part did not double");
            for (int v : grown.family.parts[pi]) {
                auto cc = is_compatible(t, v, s);
                if (!cc.ok) note_failure(rep, "grown vertex incompatible with s");
            }
        }
        rep.rows.push_back({h, q, fam.k, fam.ell, fam.m, static_cast<long long>(s.size())});
    }
    return rep;
}

} // namespace

SweepReport exhaustive_lemma_sweep(int lemma, const SweepParams& params) {
    switch (lemma) {
        case 5: return sweep_lemma5(params);
        case 6: return sweep_lemma6(params);
        case 7: return sweep_lemma7(params);
        case 9: return sweep_lemma9(params);
        case 11: return sweep_lemma11(params);
        default: fail("PreconditionFailed", "sweep supports lemmas 5, 6, 7, 9, 11");
    }
}

} // namespace psw
