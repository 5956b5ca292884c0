#ifndef EXTHOM_STRUCTURE_HPP
#define EXTHOM_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "exthom/graph.hpp"

namespace exthom {

enum class ThresholdStatus { yes, no, unknown };

/// Result of the loop-threshold recognizer. On `yes`, `ordering` lists the
/// vertices so that the reordered adjacency matrix (diagonal included) has
/// the staircase property: every 1 has only 1s to its left and above.
struct LoopThresholdVerdict {
    ThresholdStatus status = ThresholdStatus::no;
    std::vector<int> ordering;
};

/// Greedy (loop, degree)-descending candidate first; exhaustive ordering
/// search on greedy failure for n <= 8; `unknown` beyond that.
LoopThresholdVerdict is_loop_threshold(const LoopGraph& h);

/// H^bst on V(H) × V(H) (pair (u,v) is index u·n+v): (u,v)~(u',v') iff
/// uu' and vv' are edges of H and at least one of uv', u'v is not.
/// Loops arise when the rule self-applies.
LoopGraph bst_graph(const LoopGraph& h);

/// Is H a bipartite swapping target, i.e. is H^bst bipartite? The witness
/// is a 2-coloring of H^bst or an odd closed walk in it (a loop gives a
/// length-1 walk).
struct BstVerdict {
    bool is_target = false;
    std::optional<std::vector<int>> coloring;         // per bst vertex, when yes
    std::optional<std::vector<int>> odd_closed_walk;  // bst vertex list, when no
};

BstVerdict is_bipartite_swapping_target(const LoopGraph& h);

/// The bipartite double cover G × K_2 with copy i of vertex u at index
/// i·n+u: u_i ~ v_{1−i} for every edge uv of G. Isomorphic to
/// tensor_product(G, K_2) under the interleaving relabel.
Graph double_cover(const Graph& g);

/// Witness of one application of the swapping injection. Vertex sets over
/// 2G and the double cover share the i·n+u indexing.
struct SwapCertificate {
    std::vector<std::pair<int, int>> bad_edges;  // E_bad as edges of G
    uint64_t swap_set = 0;                       // A ⊆ V(G)
    uint64_t image = 0;                          // T, independent in G × K_2
};

/// Maps an independent set S of 2G (two labeled copies of G) to an
/// independent set of the double cover by swapping the copies on A, where A
/// picks per component of the bad-edge graph the side with the smaller
/// bitmask (the first valid choice in ascending subset order).
SwapCertificate swap_injection(const Graph& g, uint64_t s);

/// Recovers S from T iff the reverse bad-edge graph E'_bad(T) — same-copy
/// conflicting pairs — is bipartite; otherwise T is outside the image.
std::optional<uint64_t> swap_injection_inverse(const Graph& g, uint64_t t);

/// The loop-graph of Thm-5.5 type: vertices are all bigraph homomorphisms
/// B -> A in lexicographic image order; φ ~ φ' iff for every edge uv of B
/// both φ(u)φ'(v) and φ(v)φ'(u) are edges of A. Every vertex is looped.
LoopGraph bigraph_hom_target(const Bigraph& a, const Bigraph& b);

} // namespace exthom

#endif
