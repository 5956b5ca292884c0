#ifndef EXTHOM_STANDARD_HPP
#define EXTHOM_STANDARD_HPP

#include <string>
#include <vector>

#include "exthom/graph.hpp"

namespace exthom {

Graph complete(int n);                      // K_n
Graph complete_bipartite(int a, int b);     // K_{a,b}: 0..a-1 left, a..a+b-1 right
Graph path(int n);                          // P_n on n vertices
Graph cycle(int n);                         // C_n, n >= 3
Graph petersen();                           // outer C_5, inner pentagram, spokes
Graph heawood();                            // C_14 plus the seven distance-5 chords

/// Lex graph L_{n,m}: n vertices, the first m edges in lexicographic order
/// {0,1},{0,2},...,{0,n-1},{1,2},...
Graph lex_graph(int n, int m);

LoopGraph h_ind();      // looped vertex 0 joined to plain vertex 1
LoopGraph h_wr();       // 3-path 0-1-2, all three looped (Widom-Rowlinson)
LoopGraph two_loops();  // two isolated looped vertices

/// P_n with loops added at the given 0-based positions.
LoopGraph path_with_loops(int n, const std::vector<int>& loop_positions);

/// The five-vertex loop-threshold example: adjacency
/// (11110; 11000; 10000; 10000; 00000).
LoopGraph loop_threshold_example();

/// Named-graph mini-language: "K:5", "K:3,3", "C:5", "P:4", "L:6,9",
/// "petersen", "heawood", "H_ind", "H_WR", "two_loops", "LT5".
/// Simple graphs come back loop-free; call .simple() to narrow.
LoopGraph parse_graph_spec(const std::string& spec);

} // namespace exthom

#endif
