#include "psw/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace psw {

namespace {

[[noreturn]] void internal(const std::string& msg) {
    throw Error("InternalCheck", msg);
}

void check_internal(bool ok, const std::string& msg) {
    if (!ok) internal(msg);
}

} // namespace

// ---------------- balanced bags ----------------

int find_balanced_bag(const Graph& g, const HPartition& tp) {
    require(host_is_tree(tp.host), "PreconditionFailed", "host is not a tree");
    require(validate_hpartition(g, tp).empty(), "PreconditionFailed", "invalid tree-partition");
    const Graph& host = tp.host;
    long long total = g.n;

    // rooted subtree weights, weights = bag sizes
    std::vector<int> order, parent(host.n, -1);
    order.reserve(host.n);
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : host.neighbors(v))
            if (w != parent[v]) { parent[w] = v; order.push_back(w); }
    }
    std::vector<long long> sub(host.n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        sub[*it] += static_cast<long long>(tp.parts[*it].size());
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
    }

    // Walk toward the unique branch of weight > total/2 while one exists.
    // Branch weights at any node follow from the fixed rooting: child side
    // sub[w], parent side total - sub[x]. Every component of g - B_x lies
    // inside one branch's bags, so branch weights <= total/2 suffice.
    int x = 0;
    for (int steps = 0; steps <= host.n; ++steps) {
        int heavy = -1;
        for (int w : host.neighbors(x)) {
            long long branch = (w == parent[x]) ? total - sub[x] : sub[w];
            if (2 * branch > total) { heavy = w; break; }
        }
        if (heavy < 0) return x;
        x = heavy;
    }
    internal("centroid walk did not terminate");
}

// ---------------- separator depths ----------------

long long separator_depth_threshold(long long s_size, int h) {
    require(s_size >= 1, "PreconditionFailed", "empty separator");
    BigInt s(s_size);
    long long a = 2 + ceil_log2(s * s);
    long long b = ceil_log2(1 + BigInt(h + 2) * s) - 1;
    return std::max(a, b);
}

SeparatorDepthReport check_separator_depths(const GhGraph& gh, const VertexSet& s) {
    require(!s.empty(), "PreconditionFailed", "empty separator");
    const Graph& g = gh.graph;
    long long n = g.n;
    auto comps = components_avoiding(g, s);
    for (auto& comp : comps)
        require(2 * static_cast<long long>(comp.size()) <= n, "NotBalancedSeparator",
                "a component of G_h - S exceeds |V|/2");

    SeparatorDepthReport rep;
    rep.s_size = static_cast<long long>(s.size());
    rep.i0 = separator_depth_threshold(rep.s_size, gh.height());

    std::vector<char> depth_hit(gh.height() + 1, 0);
    for (int v : s) depth_hit[gh.tree.depth(v)] = 1;
    for (long long i = rep.i0; i <= gh.height(); ++i) {
        bool hit = depth_hit[static_cast<int>(i)] != 0;
        rep.hits.emplace_back(static_cast<int>(i), hit);
        rep.pass = rep.pass && hit;
    }
    return rep;
}

// ---------------- grid connectivity ----------------

GridConnectivityResult grid_connectivity(const SubdividedGrid& sg, const VertexSet& s,
                                         const Rational& p) {
    for (int v : s)
        require(!sg.is_grid_vertex(v) && v < sg.graph.n, "SNotSubdivisionOnly",
                "removed set must contain subdivision vertices only");
    require(Rational(static_cast<long long>(s.size())) < p * Rational(sg.y), "TooManyRemoved",
            "|s| must stay below p*y");

    auto comps = components_avoiding(sg.graph, s);
    std::vector<int> comp_of(sg.graph.n, -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i]) comp_of[v] = static_cast<int>(i);

    // a column is connected by its unsubdivided vertical edges, so one id
    std::vector<int> col_comp(sg.x);
    for (int i = 0; i < sg.x; ++i) {
        col_comp[i] = comp_of[sg.grid_id(i, 0)];
        for (int j = 1; j < sg.y; ++j)
            check_internal(comp_of[sg.grid_id(i, j)] == col_comp[i],
                           "column split despite unsubdivided vertical edges");
    }

    int best_lo = 0, best_hi = 0, lo = 0;
    for (int i = 1; i <= sg.x; ++i) {
        if (i == sg.x || col_comp[i] != col_comp[lo]) {
            if (i - 1 - lo > best_hi - best_lo) { best_lo = lo; best_hi = i - 1; }
            lo = i;
        }
    }
    GridConnectivityResult out;
    out.col_lo = best_lo;
    out.col_hi = best_hi;
    out.component = comps[col_comp[best_lo]];
    return out;
}

// ---------------- escape grids ----------------

namespace {

struct EscapeGridData {
    SubdividedGrid sg;
    VertexSet s_grid;
};

// Columns are the suffixes of left-to-right ordered escape paths over the
// last `rows` levels; horizontal segments are level-path stretches whose
// interiors become subdivision vertices, with bag members forbidden.
EscapeGridData build_escape_grid(const GhGraph& gh,
                                 const std::vector<const std::vector<int>*>& paths,
                                 int rows, const VertexSet& bag) {
    const auto& t = gh.tree;
    int h = gh.height();
    int x = static_cast<int>(paths.size());
    int d0 = h - rows + 1;
    check_internal(rows >= 1 && x >= 1, "degenerate escape grid");

    auto col_vertex = [&](int j, int depth) {
        const auto& path = *paths[j];
        int top_depth = t.depth(path.front());
        check_internal(top_depth <= d0, "column does not span the grid rows");
        return path[depth - top_depth];
    };

    std::vector<int> divisions(static_cast<std::size_t>(x - 1) * rows, 0);
    for (int j = 0; j + 1 < x; ++j) {
        for (int r = 0; r < rows; ++r) {
            int d = d0 + r;
            int u = col_vertex(j, d), u2 = col_vertex(j + 1, d);
            check_internal(u < u2, "columns out of left-to-right order");
            divisions[j * rows + r] = u2 - u - 1;
        }
    }
    EscapeGridData out;
    out.sg = build_subdivided_grid(x, rows, divisions,
                                   std::max<long long>(kDefaultVertexBudget,
                                                       4 * static_cast<long long>(gh.graph.n)));
    for (int j = 0; j + 1 < x; ++j) {
        for (int r = 0; r < rows; ++r) {
            int d = d0 + r;
            int u = col_vertex(j, d), u2 = col_vertex(j + 1, d);
            auto first = std::lower_bound(bag.begin(), bag.end(), u + 1);
            auto last = std::lower_bound(bag.begin(), bag.end(), u2);
            const auto& chain = out.sg.chain(j, r);
            for (auto it = first; it != last; ++it)
                out.s_grid.push_back(chain[*it - u - 1]);
        }
    }
    std::sort(out.s_grid.begin(), out.s_grid.end());
    return out;
}

std::string ll_str(long long v) { return std::to_string(v); }

} // namespace

// ---------------- startup ----------------

StartupResult startup(const GhGraph& gh, const HPartition& tp, const Rational& alpha,
                      long long c) {
    const Graph& g = gh.graph;
    const auto& t = gh.tree;
    int h = gh.height();
    require(alpha > Rational(0) && alpha < Rational(1, 4), "PreconditionFailed",
            "alpha must lie in the open interval (0, 1/4)");
    require(c >= 1, "PreconditionFailed", "c must be positive");
    require(host_is_tree(tp.host), "PreconditionFailed", "host is not a tree");
    require(validate_hpartition(g, tp).empty(), "PreconditionFailed", "invalid tree-partition");

    StartupResult res;
    auto infeasible = [&](const std::string& stage, const std::string& ineq,
                          const std::string& lhs, const std::string& rhs) {
        res.infeasible = InfeasibleInfo{stage, ineq, lhs, rhs};
        return res;
    };

    long long width = partition_width(tp);
    if (!(width < c * h))
        return infeasible("width", "width(tp) < c*h", ll_str(width), ll_str(c * h));

    int x0 = find_balanced_bag(g, tp);
    res.record.balanced_node = x0;
    const VertexSet& bag = tp.parts[x0];
    if (bag.empty()) return infeasible("startup", "|B_x| >= 1", "0", "1");

    auto sep = check_separator_depths(gh, bag);
    res.record.separator_size = sep.s_size;
    res.record.i0 = sep.i0;
    check_internal(sep.pass, "balanced bag misses a level path despite the depth lemma");

    Rational alpha_h = alpha * Rational(h);
    long long need_height = static_cast<long long>(alpha_h.ceil());
    long long need_size = static_cast<long long>((alpha * alpha * Rational(h) / Rational(c)).ceil());
    need_size = std::max(need_size, 1LL);

    // Y: bag members of height >= h/4
    VertexSet Y;
    for (int v : bag)
        if (4 * t.height_of(v) >= h) Y.push_back(v);
    res.record.y_size = static_cast<long long>(Y.size());
    if (Y.empty()) return infeasible("startup", "|Y| >= 1", "0", "1");

    // minimal subtree spanning Y: union of the paths to the common ancestor
    int A = Y.front();
    for (int v : Y) A = t.lca(A, v);
    std::set<int> ty;
    for (int v : Y) {
        int w = v;
        while (true) {
            ty.insert(w);
            if (w == A) break;
            w = t.parent(w);
        }
    }
    VertexSet L;
    for (int w : ty) {
        bool leaf = t.height_of(w) == 0 ||
                    (!ty.count(t.left(w)) && !ty.count(t.right(w)));
        if (leaf && w != A) L.push_back(w);
    }
    res.record.l_size = static_cast<long long>(L.size());

    if (Rational(res.record.l_size) >= alpha_h) {
        res.record.branch = 'L';
        for (int v : L)
            check_internal(t.height_of(v) >= need_height, "leaf of T_Y below alpha*h");
        check_internal(static_cast<long long>(L.size()) >= need_size, "L-branch size bound");
        res.x_node = x0;
        res.r = L;
        return res;
    }

    res.record.branch = 'Z';
    // Z: children of Y \ L hanging off the spanning subtree
    VertexSet YmL;
    std::set_difference(Y.begin(), Y.end(), L.begin(), L.end(), std::back_inserter(YmL));
    std::vector<int> Z;
    for (int v : YmL) {
        check_internal(t.height_of(v) >= 1, "height-0 vertex in Y with h >= 1");
        for (int child : {t.left(v), t.right(v)})
            if (!ty.count(child)) Z.push_back(child);
    }
    std::sort(Z.begin(), Z.end());
    res.record.z_size = static_cast<long long>(Z.size());
    if (Z.empty()) return infeasible("startup", "|Z| >= 1", "0", "1");

    // per-r escape against the bag, keeping only members able to span the
    // grid rows; drops are sound (they only lose columns)
    struct Col {
        int v;
        std::vector<int> path;
    };
    std::vector<Col> cols;
    long long dropped = 0;
    for (int r : Z) {
        VertexSet s_r;
        for (int b : bag)
            if (t.is_ancestor(r, b)) s_r.push_back(b);
        Col col;
        if (s_r.empty()) {
            col.v = r;
            col.path.push_back(r);
            while (!t.is_leaf(col.path.back())) col.path.push_back(t.left(col.path.back()));
        } else {
            if (!(static_cast<long long>(s_r.size()) < (1LL << t.height_of(r)))) {
                ++dropped;
                continue;
            }
            Escape e = find_escape_below(t, r, s_r);
            if (set_contains(bag, t.parent(e.vertex))) {
                col.v = e.vertex;
                col.path = e.path;
            } else {
                check_internal(t.parent(e.vertex) == r && !set_contains(bag, r),
                               "escape parent neither in bag nor the subtree root");
                col.v = r;
                col.path.push_back(r);
                col.path.insert(col.path.end(), e.path.begin(), e.path.end());
            }
        }
        if (t.height_of(col.v) < need_height) {
            ++dropped;
            continue;
        }
        cols.push_back(std::move(col));
    }
    res.record.dropped = dropped;
    res.record.zprime_size = static_cast<long long>(cols.size());
    if (Rational(res.record.zprime_size) < alpha_h)
        return infeasible("startup", "|Z'| >= alpha*h", ll_str(res.record.zprime_size),
                          alpha_h.str());

    std::sort(cols.begin(), cols.end(), [&](const Col& a, const Col& b) {
        return t.leaf_interval(a.v).first < t.leaf_interval(b.v).first;
    });

    int rows = static_cast<int>(need_height);
    std::vector<const std::vector<int>*> paths;
    paths.reserve(cols.size());
    for (auto& col : cols) paths.push_back(&col.path);
    auto egrid = build_escape_grid(gh, paths, rows, bag);
    Rational p = Rational(c * h, rows);
    res.record.grid.cols = static_cast<long long>(cols.size());
    res.record.grid.rows = rows;
    res.record.grid.removed = static_cast<long long>(egrid.s_grid.size());
    res.record.grid.p = p.str();
    if (!(Rational(res.record.grid.removed) < p * Rational(rows)))
        return infeasible("startup", "|S ∩ grid| < c*h", ll_str(res.record.grid.removed),
                          ll_str(c * h));

    auto gres = grid_connectivity(egrid.sg, egrid.s_grid, p);
    res.record.grid.col_lo = gres.col_lo;
    res.record.grid.col_hi = gres.col_hi;

    VertexSet R;
    for (int j = gres.col_lo; j <= gres.col_hi; ++j) R.push_back(cols[j].v);
    std::sort(R.begin(), R.end());
    if (static_cast<long long>(R.size()) < need_size)
        return infeasible("startup", "|R| >= ceil(alpha^2*h/c)",
                          ll_str(static_cast<long long>(R.size())), ll_str(need_size));

    // every member has its parent in the bag, and they share one component
    // of G - B_x, so a single neighboring bag holds them all
    int y = tp.part_of[R.front()];
    for (int v : R) {
        check_internal(set_contains(bag, t.parent(v)), "escape parent left the bag");
        check_internal(tp.part_of[v] == y, "escapes split across bags despite one component");
    }
    check_internal(y != x0 && tp.host.has_edge(x0, y), "target bag not adjacent to x");
    res.x_node = y;
    res.r = R;
    return res;
}

// ---------------- pipeline ----------------

long long canonical_c(int h) {
    require(h >= 1, "PreconditionFailed", "h must be positive");
    long long k = 0;
    while ((BigInt(1) << static_cast<unsigned>(k * k)) < h) ++k;
    return 1LL << k;
}

namespace {

long long count_in_layer(const VertexSet& part, const Layering& lay, int layer) {
    long long c = 0;
    for (int v : part)
        if (lay.layer_of[v] == layer) ++c;
    return c;
}

FamilyRecord make_family_record(int index, int x_node, const CompactFamily& fam,
                                long long m_vertex,
                                std::vector<std::vector<std::vector<int>>> paths) {
    FamilyRecord rec;
    rec.index = index;
    rec.x_node = x_node;
    rec.q = static_cast<long long>(fam.parts.size());
    rec.k = fam.k;
    rec.ell = fam.ell;
    rec.m_anchor = fam.m;
    rec.m_vertex = m_vertex;
    rec.parts = fam.parts;
    rec.anchors = fam.anchors;
    rec.paths = std::move(paths);
    return rec;
}

// families keep their parts in left-to-right anchor order
void sort_family(const CompleteBinaryTree& t, CompactFamily& fam) {
    std::vector<std::size_t> idx(fam.parts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return t.leaf_interval(fam.anchors[a]).first < t.leaf_interval(fam.anchors[b]).first;
    });
    CompactFamily out = fam;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.parts[i] = fam.parts[idx[i]];
        out.anchors[i] = fam.anchors[idx[i]];
    }
    fam = std::move(out);
}

} // namespace

WitnessCertificate extract_witness_from_family(const GhGraph& gh, const HPartition& tp,
                                               const Layering& lay, int x1,
                                               const CompactFamily& fam1_in, long long c,
                                               const Rational& alpha,
                                               std::optional<StartupRecord> trace) {
    const Graph& g = gh.graph;
    const auto& t = gh.tree;
    int h = gh.height();
    require(validate_hpartition(g, tp).empty(), "PreconditionFailed", "invalid tree-partition");
    require(host_is_tree(tp.host), "PreconditionFailed", "host is not a tree");
    require(validate_layering(g, lay).empty(), "PreconditionFailed", "invalid layering");
    require(x1 >= 0 && x1 < tp.host.n, "PreconditionFailed", "x1 out of range");
    {
        auto bad = validate_compact(fam1_in);
        require(bad.empty(), "PreconditionFailed",
                "invalid first family: " + (bad.empty() ? "" : bad.front()));
    }

    WitnessCertificate cert;
    cert.h = h;
    cert.n = g.n;
    cert.c = c;
    cert.alpha = alpha;
    cert.branch = "main";
    cert.startup_trace = std::move(trace);

    auto infeasible = [&](const std::string& stage, const std::string& ineq,
                          const std::string& lhs, const std::string& rhs) {
        cert.branch = "infeasible";
        cert.infeasible = InfeasibleInfo{stage, ineq, lhs, rhs};
        return cert;
    };

    CompactFamily fam = fam1_in;
    sort_family(t, fam);
    int cur_x = x1;
    for (auto& part : fam.parts)
        for (int v : part)
            if (!set_contains(tp.parts[cur_x], v))
                return infeasible("stage 1", "parts ⊆ B_{x_1}", std::to_string(v),
                                  "member of B_{x_1}");

    long long q1 = static_cast<long long>(fam.parts.size());
    long long need_q1 = std::max<long long>(
        1, static_cast<long long>((alpha * alpha * Rational(h) / Rational(c)).ceil()));
    if (q1 < need_q1)
        return infeasible("stage 1", "q_1 >= ceil(alpha^2*h/c)", ll_str(q1), ll_str(need_q1));

    // t1 = floor(log_{10c}(q1/3)); t2 keeps the vertex heights above h/10
    long long t1 = -1;
    {
        BigInt pow = 3;
        while (pow <= q1) {
            ++t1;
            pow *= 10 * c;
        }
    }
    long long step = floor_log2(BigInt(c) * h) + 2;
    long long h10 = static_cast<long long>(Rational(h, 10).ceil());
    long long t2 = fam.m >= h10 ? (fam.m - h10) / step : -1;
    long long tcount = std::max(0LL, std::min(t1, t2));
    cert.t1 = t1;
    cert.t2 = t2;
    cert.t = tcount;

    {
        FamilyRecord rec = make_family_record(1, cur_x, fam, fam.m, {});
        rec.ineq_text = "q_1 >= ceil(alpha^2*h/c)";
        rec.ineq_lhs = ll_str(q1);
        rec.ineq_rhs = ll_str(need_q1);
        cert.families.push_back(std::move(rec));
    }

    long long m_vertex = fam.m;
    for (long long i = 1; i <= tcount; ++i) {
        const std::string stage = "stage " + std::to_string(i);
        const VertexSet& bag = tp.parts[cur_x];
        long long bag_size = static_cast<long long>(bag.size());

        long long gap = fam.m - fam.ell - 2;
        bool small_enough = gap >= 62 || (gap >= 0 && bag_size < (1LL << gap));
        if (!(bag_size >= 1 && small_enough))
            return infeasible(stage, "1 <= |B_x| < 2^{m-l-2}", ll_str(bag_size),
                              "2^" + ll_str(gap));

        GrownFamily grown = grow_compact(fam, bag);
        {
            auto bad = validate_compact(grown.family);
            check_internal(bad.empty(), "grown family failed validation");
        }
        sort_family(t, grown.family); // grow preserves order, but keep it explicit
        // re-align paths with the sorted parts
        {
            std::map<int, std::vector<int>> by_vertex;
            for (std::size_t pi = 0; pi < grown.paths.size(); ++pi)
                for (std::size_t j = 0; j < grown.paths[pi].size(); ++j)
                    by_vertex[grown.paths[pi][j].front()] = grown.paths[pi][j];
            grown.paths.assign(grown.family.parts.size(), {});
            for (std::size_t pi = 0; pi < grown.family.parts.size(); ++pi)
                for (int v : grown.family.parts[pi]) grown.paths[pi].push_back(by_vertex.at(v));
        }

        long long m_next = m_vertex - (floor_log2(BigInt(bag_size)) + 2);
        if (m_next < 1) return infeasible(stage, "m_{i+1} >= 1", ll_str(m_next), "1");
        for (auto& part : grown.family.parts)
            for (int v : part)
                check_internal(t.height_of(v) >= m_next, "escape fell below the height bound");

        // columns: every vertex of the grown family in left-to-right order
        struct ColRef {
            long long pos;
            int part;
            const std::vector<int>* path;
        };
        std::vector<ColRef> cols;
        for (std::size_t pi = 0; pi < grown.family.parts.size(); ++pi)
            for (std::size_t j = 0; j < grown.family.parts[pi].size(); ++j)
                cols.push_back({t.leaf_interval(grown.family.parts[pi][j]).first,
                                static_cast<int>(pi), &grown.paths[pi][j]});
        std::sort(cols.begin(), cols.end(),
                  [](const ColRef& a, const ColRef& b) { return a.pos < b.pos; });

        std::vector<const std::vector<int>*> paths;
        paths.reserve(cols.size());
        for (auto& col : cols) paths.push_back(col.path);
        auto egrid = build_escape_grid(gh, paths, static_cast<int>(m_next), bag);
        Rational p = Rational(c * h, m_next);
        if (!(Rational(static_cast<long long>(egrid.s_grid.size())) < Rational(c * h)))
            return infeasible(stage, "|S ∩ grid| < c*h",
                              ll_str(static_cast<long long>(egrid.s_grid.size())), ll_str(c * h));
        auto gres = grid_connectivity(egrid.sg, egrid.s_grid, p);

        GridRecord grec;
        grec.cols = static_cast<long long>(cols.size());
        grec.rows = m_next;
        grec.removed = static_cast<long long>(egrid.s_grid.size());
        grec.col_lo = gres.col_lo;
        grec.col_hi = gres.col_hi;
        grec.p = p.str();
        cert.grids.push_back(grec);

        // keep the parts entirely inside the column interval
        std::vector<char> keep(grown.family.parts.size(), 1);
        std::vector<long long> seen_cols(grown.family.parts.size(), 0);
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (j < gres.col_lo || j > gres.col_hi) keep[cols[j].part] = 0;
            else seen_cols[cols[j].part]++;
        }
        long long partial = 0;
        for (std::size_t pi = 0; pi < keep.size(); ++pi)
            if (!keep[pi] && seen_cols[pi] > 0) ++partial;
        check_internal(partial <= 2, "more than two partially covered parts");

        CompactFamily next;
        next.tree_height = h;
        next.k = grown.family.k;
        next.ell = grown.family.ell;
        next.m = grown.family.m;
        std::vector<std::vector<std::vector<int>>> next_paths;
        for (std::size_t pi = 0; pi < keep.size(); ++pi) {
            if (!keep[pi]) continue;
            next.parts.push_back(grown.family.parts[pi]);
            next.anchors.push_back(grown.family.anchors[pi]);
            next_paths.push_back(grown.paths[pi]);
        }
        long long q_next = static_cast<long long>(next.parts.size());
        Rational rhs = Rational(static_cast<long long>(fam.parts.size())) / Rational(10 * c) -
                       Rational(2);
        if (!(Rational(q_next) > rhs))
            return infeasible(stage, "q_{i+1} > q_i/(10*c) - 2", ll_str(q_next), rhs.str());
        if (q_next < 1) return infeasible(stage, "q_{i+1} >= 1", ll_str(q_next), "1");

        // hop to the unique neighboring bag holding every new vertex
        int first_v = next.parts.front().front();
        int next_x = tp.part_of[first_v];
        for (std::size_t pi = 0; pi < next.parts.size(); ++pi)
            for (int v : next.parts[pi]) {
                check_internal(set_contains(bag, t.parent(v)), "grown vertex parent left the bag");
                check_internal(tp.part_of[v] == next_x,
                               "grown vertices split across bags despite one component");
            }
        check_internal(next_x != cur_x && tp.host.has_edge(cur_x, next_x),
                       "next bag not adjacent in the host tree");

        FamilyRecord rec = make_family_record(static_cast<int>(i) + 1, next_x, next, m_next,
                                              std::move(next_paths));
        rec.ineq_text = "q_{i+1} > q_i/(10*c) - 2";
        rec.ineq_lhs = ll_str(q_next);
        rec.ineq_rhs = rhs.str();
        cert.families.push_back(std::move(rec));

        fam = std::move(next);
        cur_x = next_x;
        m_vertex = m_next;
    }

    // final cell: leftmost part of the last family
    const VertexSet& R = fam.parts.front();
    check_internal(static_cast<long long>(R.size()) == (1LL << cert.t),
                   "final part is not of size 2^t");
    long long ell_final = fam.ell;
    long long diam_bound = 2 * ell_final;
    auto [layer, rcount] = diameter_spread(g, R, lay);
    long long cell = count_in_layer(tp.parts[cur_x], lay, layer);

    long long denom = 2 * cert.t * (ceil_log2(BigInt(c) * h) + 2) + 1;
    long long bound = static_cast<long long>(Rational(1LL << cert.t, denom).ceil());
    long long bound_ell = static_cast<long long>(Rational(1LL << cert.t, diam_bound + 1).ceil());
    check_internal(rcount >= bound_ell && bound_ell >= bound && bound >= 1,
                   "final bound chain broke");
    check_internal(cell >= rcount, "bag cell smaller than its own part count");

    cert.final_cell.x = cur_x;
    cert.final_cell.layer = layer;
    cert.final_cell.part_index = 0;
    cert.final_cell.cell = cell;
    cert.final_cell.bound = bound;
    cert.final_cell.bound_ell = bound_ell;
    cert.final_cell.ell_final = ell_final;
    cert.final_cell.diam_bound = diam_bound;
    return cert;
}

WitnessCertificate extract_witness(const GhGraph& gh, const HPartition& tp, const Layering& lay,
                                   const WitnessConfig& config) {
    const Graph& g = gh.graph;
    const auto& t = gh.tree;
    int h = gh.height();
    require(validate_hpartition(g, tp).empty(), "PreconditionFailed", "invalid partition");
    require(validate_layering(g, lay).empty(), "PreconditionFailed", "invalid layering");
    require(config.alpha > Rational(0) && config.alpha < Rational(1, 4), "PreconditionFailed",
            "alpha must lie in (0, 1/4)");

    WitnessCertificate cert;
    cert.h = h;
    cert.n = g.n;
    cert.c = config.c_override.value_or(canonical_c(h));
    cert.alpha = config.alpha;
    cert.inputs = config.inputs;

    int xmax = 0;
    for (int x = 1; x < tp.host.n; ++x)
        if (tp.parts[x].size() > tp.parts[xmax].size()) xmax = x;
    long long bmax = static_cast<long long>(tp.parts[xmax].size());
    long long threshold = cert.c * h;

    if (bmax >= threshold) {
        // a huge bag spreads over few layers, so one cell is already large
        const VertexSet& bag = tp.parts[xmax];
        long long diam = std::min<long long>(2 * h, tree_diameter_of_subset(t, bag));
        auto [layer, cell] = diameter_spread(g, bag, lay);
        long long bound = static_cast<long long>(Rational(bmax, diam + 1).ceil());
        check_internal(cell >= bound && bound >= 1, "early-exit bound chain broke");
        cert.branch = "early-exit";
        cert.early.x = xmax;
        cert.early.bag_size = bmax;
        cert.early.threshold = threshold;
        cert.early.diam_bound = diam;
        cert.early.layer = layer;
        cert.early.cell = cell;
        cert.early.bound = bound;
        return cert;
    }

    if (!host_is_tree(tp.host)) {
        cert.branch = "infeasible";
        cert.infeasible = InfeasibleInfo{"precheck", "host is a tree (acyclic, connected)",
                                         "non-tree host", "tree"};
        return cert;
    }

    StartupResult st = startup(gh, tp, cert.alpha, cert.c);
    if (!st.ok()) {
        cert.branch = "infeasible";
        cert.infeasible = *st.infeasible;
        cert.startup_trace = st.record;
        return cert;
    }

    CompactFamily fam1;
    fam1.tree_height = h;
    fam1.k = 1;
    fam1.ell = 0;
    fam1.m = static_cast<long long>((cert.alpha * Rational(h)).ceil());
    for (int v : st.r) {
        fam1.parts.push_back({v});
        fam1.anchors.push_back(v);
    }
    WitnessCertificate out = extract_witness_from_family(gh, tp, lay, st.x_node, fam1, cert.c,
                                                         cert.alpha, st.record);
    out.inputs = config.inputs;
    return out;
}

// ---------------- audit ----------------

namespace {

void audit_check(std::vector<std::string>& out, bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
}

} // namespace

std::vector<std::string> audit_certificate(const GhGraph& gh, const HPartition& tp,
                                           const Layering& lay, const WitnessCertificate& cert) {
    std::vector<std::string> bad;
    const Graph& g = gh.graph;
    const auto& t = gh.tree;
    int h = gh.height();

    audit_check(bad, cert.h == h, "certificate height differs from the graph");
    audit_check(bad, cert.n == g.n && cert.n == (1LL << (h + 1)) - 1, "vertex count mismatch");
    audit_check(bad, cert.c >= 1, "nonpositive c");
    audit_check(bad, cert.alpha > Rational(0) && cert.alpha < Rational(1, 4),
                "alpha outside (0, 1/4)");
    audit_check(bad, validate_hpartition(g, tp).empty(), "stored partition is invalid");
    audit_check(bad, validate_layering(g, lay).empty(), "stored layering is invalid");
    if (!bad.empty()) return bad;

    if (cert.branch == "infeasible") {
        audit_check(bad, !cert.infeasible.inequality.empty(),
                    "infeasible outcome without a named inequality");
        return bad;
    }

    if (cert.branch == "early-exit") {
        const auto& e = cert.early;
        if (e.x < 0 || e.x >= tp.host.n) return {"early-exit node out of range"};
        const VertexSet& bag = tp.parts[e.x];
        audit_check(bad, e.bag_size == static_cast<long long>(bag.size()), "bag size mismatch");
        audit_check(bad, e.threshold == cert.c * h, "threshold mismatch");
        audit_check(bad, e.bag_size >= e.threshold, "bag below the early-exit threshold");
        long long diam = std::min<long long>(2 * h, tree_diameter_of_subset(t, bag));
        audit_check(bad, e.diam_bound == diam, "diameter bound mismatch");
        audit_check(bad, e.layer >= 0 && e.layer < lay.layer_count(), "layer out of range");
        if (bad.empty()) {
            long long cell = count_in_layer(bag, lay, e.layer);
            audit_check(bad, e.cell == cell, "cell count mismatch");
            long long bound = static_cast<long long>(Rational(e.bag_size, diam + 1).ceil());
            audit_check(bad, e.bound == bound, "bound arithmetic mismatch");
            audit_check(bad, e.cell >= e.bound && e.bound >= 1, "cell below its bound");
        }
        return bad;
    }

    if (cert.branch != "main") return {"unknown branch: " + cert.branch};

    audit_check(bad, host_is_tree(tp.host), "main branch requires a tree host");
    audit_check(bad, !cert.families.empty(), "main branch without families");
    audit_check(bad, cert.t >= 0 && cert.t <= 62, "t out of range");
    if (!bad.empty()) return bad;
    audit_check(bad, cert.t == static_cast<long long>(cert.families.size()) - 1,
                "t does not match the family count");
    audit_check(bad, cert.grids.size() == cert.families.size() - 1,
                "grid record count mismatch");
    if (cert.t != static_cast<long long>(cert.families.size()) - 1) return bad;

    // recompute t1/t2 from the first family
    const FamilyRecord& f1 = cert.families.front();
    {
        long long t1 = -1;
        BigInt pow = 3;
        while (pow <= f1.q) {
            ++t1;
            pow *= 10 * cert.c;
        }
        long long step = floor_log2(BigInt(cert.c) * h) + 2;
        long long h10 = static_cast<long long>(Rational(h, 10).ceil());
        long long t2 = f1.m_anchor >= h10 ? (f1.m_anchor - h10) / step : -1;
        audit_check(bad, cert.t1 == t1, "t1 mismatch");
        audit_check(bad, cert.t2 == t2, "t2 mismatch");
        audit_check(bad, cert.t == std::max(0LL, std::min(t1, t2)), "t policy mismatch");
    }

    for (std::size_t fi = 0; fi < cert.families.size(); ++fi) {
        const FamilyRecord& rec = cert.families[fi];
        const std::string tag = "family " + std::to_string(fi + 1) + ": ";
        audit_check(bad, rec.index == static_cast<int>(fi) + 1, tag + "index mismatch");
        audit_check(bad, rec.x_node >= 0 && rec.x_node < tp.host.n, tag + "node out of range");
        if (rec.x_node < 0 || rec.x_node >= tp.host.n) return bad;
        audit_check(bad, rec.k == (1LL << fi), tag + "k is not 2^{i-1}");
        audit_check(bad, rec.q == static_cast<long long>(rec.parts.size()),
                    tag + "q does not count the parts");
        audit_check(bad, rec.parts.size() == rec.anchors.size(), tag + "anchor count mismatch");
        for (auto& part : rec.parts)
            audit_check(bad, static_cast<long long>(part.size()) == rec.k,
                        tag + "part size is not exactly k");
        audit_check(bad, rec.m_anchor == f1.m_anchor, tag + "anchor height floor changed");

        CompactFamily fam;
        fam.tree_height = h;
        fam.parts = rec.parts;
        fam.anchors = rec.anchors;
        fam.k = rec.k;
        fam.ell = rec.ell;
        fam.m = rec.m_anchor;
        auto cbad = validate_compact(fam);
        for (auto& s : cbad) bad.push_back(tag + s);

        const VertexSet& bag = tp.parts[rec.x_node];
        for (auto& part : rec.parts)
            for (int v : part) {
                audit_check(bad, set_contains(bag, v), tag + "member outside its bag");
                audit_check(bad, t.height_of(v) >= rec.m_vertex,
                            tag + "member below the recorded height floor");
            }

        if (fi == 0) {
            audit_check(bad, rec.ell == 0 && rec.k == 1, tag + "first family must be singletons");
            long long need_q1 = std::max<long long>(
                1, static_cast<long long>(
                       (cert.alpha * cert.alpha * Rational(h) / Rational(cert.c)).ceil()));
            audit_check(bad, rec.q >= need_q1, tag + "q_1 below ceil(alpha^2*h/c)");
            audit_check(bad, rec.ineq_lhs == std::to_string(rec.q) &&
                                 rec.ineq_rhs == std::to_string(need_q1),
                        tag + "recorded inequality does not re-evaluate");
            audit_check(bad, rec.m_vertex == rec.m_anchor, tag + "m_vertex of family 1");
            continue;
        }

        const FamilyRecord& prev = cert.families[fi - 1];
        const VertexSet& prev_bag = tp.parts[prev.x_node];
        long long prev_bag_size = static_cast<long long>(prev_bag.size());
        audit_check(bad,
                    rec.ell == prev.ell + ceil_log2(BigInt(prev_bag_size)) + 2,
                    tag + "l does not follow the growth step");
        audit_check(bad,
                    rec.m_vertex == prev.m_vertex - (floor_log2(BigInt(prev_bag_size)) + 2),
                    tag + "vertex height floor does not follow the growth step");
        audit_check(bad, rec.x_node != prev.x_node && tp.host.has_edge(prev.x_node, rec.x_node),
                    tag + "bag hop is not a host edge");

        // anchors can only be trimmed, never invented
        VertexSet prev_anchors = sorted_unique({prev.anchors.begin(), prev.anchors.end()});
        for (int a : rec.anchors)
            audit_check(bad, set_contains(prev_anchors, a), tag + "anchor not present before");

        // compatibility witnesses against the previous bag
        audit_check(bad, rec.paths.size() == rec.parts.size(), tag + "path table shape");
        for (std::size_t pi = 0; pi < rec.parts.size() && pi < rec.paths.size(); ++pi) {
            audit_check(bad, rec.paths[pi].size() == rec.parts[pi].size(),
                        tag + "path table shape");
            for (std::size_t j = 0; j < rec.parts[pi].size() && j < rec.paths[pi].size(); ++j) {
                const auto& path = rec.paths[pi][j];
                int v = rec.parts[pi][j];
                if (path.empty() || path.front() != v) {
                    bad.push_back(tag + "path does not start at its vertex");
                    continue;
                }
                audit_check(bad, set_contains(prev_bag, t.parent(v)),
                            tag + "parent not in the previous bag");
                bool ok = true;
                for (std::size_t s = 0; s + 1 < path.size(); ++s)
                    ok = ok && (path[s + 1] == t.left(path[s]) || path[s + 1] == t.right(path[s]));
                ok = ok && t.is_leaf(path.back());
                for (int u : path) ok = ok && !set_contains(prev_bag, u);
                audit_check(bad, ok, tag + "escape path fails replay");
            }
        }

        Rational rhs = Rational(prev.q) / Rational(10 * cert.c) - Rational(2);
        audit_check(bad, Rational(rec.q) > rhs, tag + "growth inequality fails");
        audit_check(bad, rec.ineq_lhs == std::to_string(rec.q) && rec.ineq_rhs == rhs.str(),
                    tag + "recorded inequality does not re-evaluate");
    }

    // final cell
    const auto& fin = cert.final_cell;
    const FamilyRecord& flast = cert.families.back();
    audit_check(bad, fin.x == flast.x_node, "final node differs from the last family");
    audit_check(bad, fin.part_index >= 0 &&
                         fin.part_index < static_cast<int>(flast.parts.size()),
                "final part index out of range");
    if (fin.part_index < 0 || fin.part_index >= static_cast<int>(flast.parts.size())) return bad;
    const VertexSet& R = flast.parts[fin.part_index];
    audit_check(bad, static_cast<long long>(R.size()) == (1LL << cert.t),
                "final part is not of size 2^t");
    audit_check(bad, fin.ell_final == flast.ell, "final l mismatch");
    audit_check(bad, fin.diam_bound == 2 * fin.ell_final, "final diameter bound mismatch");
    int anchor = flast.anchors[fin.part_index];
    for (int v : R)
        audit_check(bad, t.is_ancestor(anchor, v) && t.tree_distance(v, anchor) <= fin.ell_final,
                    "final part strays from its anchor");
    audit_check(bad, tree_diameter_of_subset(t, R) <= fin.diam_bound,
                "final diameter bound is not an upper bound");
    audit_check(bad, fin.layer >= 0 && fin.layer < lay.layer_count(), "final layer out of range");
    if (fin.layer >= 0 && fin.layer < lay.layer_count()) {
        long long cell = count_in_layer(tp.parts[fin.x], lay, fin.layer);
        long long rcell = count_in_layer(R, lay, fin.layer);
        long long denom = 2 * cert.t * (ceil_log2(BigInt(cert.c) * h) + 2) + 1;
        long long bound = static_cast<long long>(Rational(1LL << cert.t, denom).ceil());
        long long bound_ell =
            static_cast<long long>(Rational(1LL << cert.t, fin.diam_bound + 1).ceil());
        audit_check(bad, fin.cell == cell, "final cell count mismatch");
        audit_check(bad, fin.bound == bound, "final bound arithmetic mismatch");
        audit_check(bad, fin.bound_ell == bound_ell, "final l-bound arithmetic mismatch");
        audit_check(bad, rcell >= bound_ell, "part cell below its l-bound");
        audit_check(bad, fin.cell >= rcell, "bag cell below the part cell");
        audit_check(bad, fin.cell >= fin.bound && fin.bound >= 1, "final chain fails");
    }
    return bad;
}

// ---------------- reporting ----------------

LowerBoundReport lower_bound_report(const WitnessCertificate& cert, long long delta,
                                    long long treewidth) {
    require(cert.branch == "main" || cert.branch == "early-exit", "PreconditionFailed",
            "report needs a completed certificate");
    require(cert.h >= 1 && cert.h <= 62, "PreconditionFailed", "height out of range");
    LowerBoundReport rep;
    rep.h = cert.h;
    rep.n = (1LL << (cert.h + 1)) - 1;
    rep.cell = cert.branch == "main" ? cert.final_cell.cell : cert.early.cell;
    rep.c = cert.c;
    rep.delta = delta;
    rep.treewidth = treewidth;
    rep.implied_width = BigInt(24) * cert.c * delta * (treewidth + 1);
    rep.cdt1_lower = Rational(rep.cell, 24).ceil();
    rep.refuted = rep.implied_width < rep.cell;
    rep.verdict = rep.refuted
                      ? "claim refuted for this partition pair: 24*c*delta*(t+1) = " +
                            rep.implied_width.str() + " < cell = " + std::to_string(rep.cell)
                      : "claim not refuted by this pair: 24*c*delta*(t+1) = " +
                            rep.implied_width.str() + " >= cell = " + std::to_string(rep.cell);
    return rep;
}

} // namespace psw
