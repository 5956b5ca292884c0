#ifndef EXTHOM_HOM_HPP
#define EXTHOM_HOM_HPP

#include "exthom/bignum.hpp"
#include "exthom/graph.hpp"

namespace exthom {

/// Exact |Hom(G,H)|: maps sending every edge of G to an edge of H (loops in
/// H admissible images of edges with both ends mapped together). The empty
/// graph has exactly one (empty) homomorphism.
BigCount hom_count(const Graph& g, const LoopGraph& h);

/// Homs of bigraphs respecting the bipartitions: left vertices of G land on
/// left vertices of H, right on right.
BigCount bigraph_hom_count(const Bigraph& g, const Bigraph& h);

/// i(G) = hom(G, H_ind): number of independent sets.
BigCount independent_set_count(const Graph& g);

/// pm(G): number of perfect matchings (0 for odd order).
BigCount perfect_matching_count(const Graph& g);

/// hom(G, K_q): proper q-colorings.
BigCount coloring_count(const Graph& g, int q);

/// hom(G, kK_d) = prod over components of k * hom(component, K_d), without
/// materializing the disjoint target.
BigCount hom_count_disjoint_cliques(const Graph& g, int k, int d);

} // namespace exthom

#endif
