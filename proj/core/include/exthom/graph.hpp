#ifndef EXTHOM_GRAPH_HPP
#define EXTHOM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exthom {

// Storage bound: adjacency rows are single 64-bit masks. Product/power
// constructors enforce this (and any lower configured cap) up front.
inline constexpr int kMaxVertices = 64;

inline uint64_t bit(int v) { return uint64_t{1} << v; }

/// Simple undirected graph: symmetric adjacency, empty diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool edge(int u, int v) const { return adj_[u] >> v & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    uint64_t vertex_mask() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<uint64_t> adj_;
    friend class LoopGraph;
};

/// Undirected graph with loops permitted; the target side of hom counting.
/// A loop is the diagonal bit: edge(v, v).
class LoopGraph {
public:
    LoopGraph() = default;
    explicit LoopGraph(int n);
    LoopGraph(const Graph& g);  // every simple graph is a loop-graph

    int n() const { return n_; }
    bool edge(int u, int v) const { return adj_[u] >> v & 1; }
    bool loop(int v) const { return edge(v, v); }
    void add_edge(int u, int v);  // u == v adds a loop
    uint64_t neighbors(int v) const { return adj_[v]; }  // includes v when looped
    int edge_count() const;                              // loops count once
    int loop_count() const;
    uint64_t loop_mask() const;
    uint64_t vertex_mask() const;

    /// The underlying simple graph with loops stripped.
    Graph strip_loops() const;
    /// Conversion that insists there are no loops to strip.
    Graph simple() const;

    bool operator==(const LoopGraph&) const = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<uint64_t> adj_;
};

/// Bipartite graph with a designated left/right side per vertex.
struct Bigraph {
    Graph g;
    std::vector<int> side;  // 0 = left, 1 = right

    Bigraph() = default;
    Bigraph(Graph graph, std::vector<int> sides);  // validates edges cross sides
    uint64_t side_mask(int s) const;
    int side_count(int s) const;
};

/// Everything the bound checkers ask about a graph, computed once.
struct GraphFacts {
    int n = 0;
    int m = 0;
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> regular_degree;
    std::optional<std::vector<int>> bipartition;      // 0/1 colors when bipartite
    std::optional<std::vector<int>> odd_closed_walk;  // an odd cycle otherwise
    std::optional<int> girth;                         // absent iff acyclic
    bool triangle_free = true;
    bool c4_free = true;  // no 4-cycle (independent of triangle_free)
    int components = 0;
    std::vector<int> component_id;
    std::optional<std::pair<int, int>> biregular;  // side degrees (a <= b)

    bool connected() const { return components <= 1; }
};

GraphFacts analyze(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const std::vector<Graph>& parts);
Graph disjoint_union(const Graph& g, int copies);

/// G with a loop added at every vertex.
LoopGraph add_loops(const Graph& g);
/// Induced subgraph of H on its looped vertices.
LoopGraph looped_subgraph(const LoopGraph& h);

/// Induced subgraph on the vertices of `mask`, relabeled in ascending order.
Graph induced_subgraph(const Graph& g, uint64_t mask);
LoopGraph induced_subgraph(const LoopGraph& h, uint64_t mask);

/// A Bigraph over a connected bipartite graph, sides from its 2-coloring
/// (vertex 0 goes left). Throws if g is not bipartite or not connected.
Bigraph as_bigraph(const Graph& g);

bool is_independent_set(const Graph& g, uint64_t mask);

} // namespace exthom

#endif
