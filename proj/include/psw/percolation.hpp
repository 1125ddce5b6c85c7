#ifndef PSW_PERCOLATION_HPP
#define PSW_PERCOLATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "psw/binary_tree.hpp"
#include "psw/graph.hpp"

namespace psw {

// An escape is a vertex plus a witness path descending from it to a leaf,
// disjoint from the blocking set.
struct Escape {
    int vertex = -1;
    std::vector<int> path; // vertex .. leaf, consecutive parent-child steps
};

// Single-escape search on T_h: returns v with
//   (i)  2^depth(v) <= 2|s|,
//   (ii) v != root and parent(v) in s ∪ {root},
//   (iii) a v-to-leaf path avoiding s.
// Pre: 1 <= |s| < 2^h (NoEscape otherwise). s may contain the root.
Escape find_escape(const CompleteBinaryTree& t, const VertexSet& s);

// Two escapes, one per root subtree, unrelated, with 2^depth <= 4|s|.
// Pre: 1 <= |s| < 2^{h-1}.
std::pair<Escape, Escape> find_two_escapes(const CompleteBinaryTree& t, const VertexSet& s);

// Same searches relative to the subtree rooted at r; s_sub must lie inside
// that subtree. Depths in the bounds are relative to r.
Escape find_escape_below(const CompleteBinaryTree& t, int r, const VertexSet& s_sub);
std::pair<Escape, Escape> find_two_escapes_below(const CompleteBinaryTree& t, int r,
                                                 const VertexSet& s_sub);

// parent(v) in s and a v-to-leaf path avoiding s; path witness when true.
struct CompatibleCheck {
    bool ok = false;
    std::vector<int> path;
};
CompatibleCheck is_compatible(const CompleteBinaryTree& t, int v, const VertexSet& s);

// (k,l,m)-compact family: unrelated parts of size >= k, each within
// distance l of a common-ancestor anchor; anchors unrelated, height >= m.
struct CompactFamily {
    int tree_height = 0;
    std::vector<VertexSet> parts;
    std::vector<int> anchors;
    long long k = 1;
    long long ell = 0;
    long long m = 0;
};

// All three defining clauses plus the two consequences (union unrelated,
// anchors order the parts blockwise). Violations are data, not errors.
std::vector<std::string> validate_compact(const CompactFamily& f);

struct GrownFamily {
    CompactFamily family;
    // paths[i][j] is the escape path of family.parts[i][j]
    std::vector<std::vector<std::vector<int>>> paths;
};

// Replaces every element r of every part by its two escapes against
// s ∩ subtree(r), yielding a (2k, l + ceil(log2|s|) + 2, m)-compact family
// compatible with s. Pre: f valid, ∪parts ⊆ s, 1 <= |s| < 2^{m-l-2}.
GrownFamily grow_compact(const CompactFamily& f, const VertexSet& s);

} // namespace psw

#endif
