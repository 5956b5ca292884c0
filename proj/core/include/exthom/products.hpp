#ifndef EXTHOM_PRODUCTS_HPP
#define EXTHOM_PRODUCTS_HPP

#include "exthom/graph.hpp"

namespace exthom {

/// Tensor (categorical) product: vertex (u,v) is index u*n(B)+v;
/// (u,v)~(u',v') iff uu' ∈ E(A) and vv' ∈ E(B).
LoopGraph tensor_product(const LoopGraph& a, const LoopGraph& b);
Graph tensor_product(const Graph& a, const Graph& b);

/// Exponentiation H^G: vertices are all maps V(G) -> V(H) in lexicographic
/// order (f(0) most significant); f ~ f' iff for every edge uv of G both
/// f(u)f'(v) and f(v)f'(u) are edges of H. Self-adjacency yields loops.
LoopGraph exponentiate(const LoopGraph& h, const Graph& g);

/// Extended line graph: vertices are E(H) in lexicographic order; e ~ f iff
/// e = f (every vertex looped), e and f share an endpoint, or e = {a,b} and
/// f = {c,d} are disjoint with a~c, b~d in H or a~d, b~c in H.
LoopGraph extended_line_graph(const Graph& h);

} // namespace exthom

#endif
