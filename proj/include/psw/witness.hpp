#ifndef PSW_WITNESS_HPP
#define PSW_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "psw/generators.hpp"
#include "psw/graph.hpp"
#include "psw/partitions.hpp"
#include "psw/percolation.hpp"
#include "psw/rational.hpp"

namespace psw {

// ---------------- balanced bags and separator depths ----------------

// A host node whose bag leaves no component of g - B_x bigger than n/2.
// Weighted-centroid descent on the host tree; always exists.
int find_balanced_bag(const Graph& g, const HPartition& tp);

// i0 = ceil(max(2 log2|S| + 2, log2(1 + (h+2)|S|) - 1)), exact integers.
long long separator_depth_threshold(long long s_size, int h);

struct SeparatorDepthReport {
    long long s_size = 0;
    long long i0 = 0;
    std::vector<std::pair<int, bool>> hits; // (depth, D_depth hit?) for i0..h
    bool pass = true;                       // vacuously true when i0 > h
};

// Requires s to be a balanced separator of G_h (NotBalancedSeparator
// otherwise); reports which level paths it meets at depths i0..h.
SeparatorDepthReport check_separator_depths(const GhGraph& gh, const VertexSet& s);

// ---------------- subdivided-grid connectivity ----------------

struct GridConnectivityResult {
    VertexSet component;       // vertices of the winning component of sg - s
    int col_lo = 0, col_hi = 0; // inclusive column interval inside it
};

// Longest run of consecutive columns lying in one component of sg - s
// (leftmost on ties). For integer p the run length is >= ceil(x/p).
// s must contain subdivision vertices only and satisfy |s| < p*y.
GridConnectivityResult grid_connectivity(const SubdividedGrid& sg, const VertexSet& s,
                                         const Rational& p);

// ---------------- the pipeline ----------------

// A named inequality that failed; first-class outcome, never an exception.
struct InfeasibleInfo {
    std::string stage;
    std::string inequality;
    std::string lhs;
    std::string rhs;
};

struct GridRecord {
    long long cols = 0, rows = 0, removed = 0;
    long long col_lo = 0, col_hi = 0;
    std::string p; // rational
};

struct StartupRecord {
    int balanced_node = -1;
    long long separator_size = 0;
    long long i0 = 0;
    long long y_size = 0;
    long long l_size = 0;
    char branch = '?'; // 'L' or 'Z'
    long long z_size = 0;
    long long zprime_size = 0;
    long long dropped = 0;
    GridRecord grid;
};

struct StartupResult {
    std::optional<InfeasibleInfo> infeasible;
    int x_node = -1;
    VertexSet r;
    StartupRecord record;
    bool ok() const { return !infeasible.has_value(); }
};

// The startup lemma with every asymptotic step replaced by an explicit
// integer or rational check. alpha must lie in the open interval (0, 1/4).
// On success: r ⊆ B_{x_node}, unrelated, |r| >= ceil(alpha^2 h / c), every
// member of height >= ceil(alpha h).
StartupResult startup(const GhGraph& gh, const HPartition& tp, const Rational& alpha,
                      long long c);

// ---------------- certificates ----------------

struct FamilyRecord {
    int index = 0;  // 1-based stage number
    int x_node = -1;
    long long q = 0;
    long long k = 1;
    long long ell = 0;
    long long m_anchor = 0;
    long long m_vertex = 0;
    std::vector<VertexSet> parts;
    std::vector<int> anchors;
    // escape paths against the previous bag; empty for the first family
    std::vector<std::vector<std::vector<int>>> paths;
    std::string ineq_text;
    std::string ineq_lhs, ineq_rhs;
};

struct WitnessCertificate {
    int h = 0;
    long long n = 0;
    long long c = 1;
    Rational alpha{1, 5};
    std::string branch; // "main" | "early-exit" | "infeasible"

    // early-exit branch
    struct EarlyExit {
        int x = -1;
        long long bag_size = 0;
        long long threshold = 0;
        long long diam_bound = 0;
        int layer = -1;
        long long cell = 0;
        long long bound = 0;
    } early;

    // main branch
    std::optional<StartupRecord> startup_trace;
    std::vector<FamilyRecord> families;
    std::vector<GridRecord> grids;
    long long t = 0, t1 = 0, t2 = 0;
    struct Final {
        int x = -1;
        int layer = -1;
        int part_index = 0;
        long long cell = 0;
        long long bound = 0;      // ceil(2^t / (2t(ceil_log2(ch)+2) + 1))
        long long bound_ell = 0;  // ceil(2^t / (2*ell_final + 1)), the tighter form
        long long ell_final = 0;
        long long diam_bound = 0; // 2*ell_final
    } final_cell;

    InfeasibleInfo infeasible;

    struct Inputs {
        std::string graph, meta, tree_partition, layering;
    } inputs;
};

// canonical width proxy: 2^k for the least k with 2^{k^2} >= h
long long canonical_c(int h);

struct WitnessConfig {
    Rational alpha{1, 5};
    std::optional<long long> c_override; // experiments may widen the proxy
    WitnessCertificate::Inputs inputs;
};

// The full lower-bound pipeline. Early-exits on a bag of size >= c*h,
// otherwise runs startup and t growth iterations; every proof inequality is
// checked before use and failure yields branch "infeasible" with the
// inequality named.
WitnessCertificate extract_witness(const GhGraph& gh, const HPartition& tp, const Layering& lay,
                                   const WitnessConfig& config = {});

// Iteration driver starting from a given first family inside bag x1; used
// by extract_witness after startup and directly by tests and experiments.
WitnessCertificate extract_witness_from_family(const GhGraph& gh, const HPartition& tp,
                                               const Layering& lay, int x1,
                                               const CompactFamily& fam1, long long c,
                                               const Rational& alpha,
                                               std::optional<StartupRecord> trace = {});

// Independent replay of every stage claim; empty list = clean audit.
std::vector<std::string> audit_certificate(const GhGraph& gh, const HPartition& tp,
                                           const Layering& lay, const WitnessCertificate& cert);

// ---------------- explicit-constant reporting ----------------

struct LowerBoundReport {
    int h = 0;
    long long n = 0;
    long long cell = 0;
    long long c = 0, delta = 0, treewidth = 0;
    BigInt implied_width;    // 24 * c * delta * (t+1)
    BigInt cdt1_lower;       // any claim routed through this pair needs
                             // c*delta*(t+1) >= this
    bool refuted = false;
    std::string verdict;
};

// Compares the certificate's cell against the tree-product width implied by
// a claimed containment in H ⊠ P ⊠ K_c with deg(H) = delta, tw(H) = t.
LowerBoundReport lower_bound_report(const WitnessCertificate& cert, long long delta,
                                    long long treewidth);

} // namespace psw

#endif
