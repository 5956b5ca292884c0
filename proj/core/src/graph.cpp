#include "exthom/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace exthom {

namespace {

void check_order(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds the " +
                                    std::to_string(kMaxVertices) + "-vertex limit");
}

} // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    adj_.assign(n, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) +
                                            " not allowed in a simple graph");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        uint64_t later = adj_[u] >> (u + 1);
        while (later) {
            int v = u + 1 + std::countr_zero(later);
            out.emplace_back(u, v);
            later &= later - 1;
        }
    }
    return out;
}

LoopGraph::LoopGraph(int n) : n_(n) {
    check_order(n);
    adj_.assign(n, 0);
}

LoopGraph::LoopGraph(const Graph& g) : n_(g.n_), adj_(g.adj_) {}

void LoopGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

void LoopGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

int LoopGraph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]) + (loop(v) ? 1 : 0);
    return twice / 2;
}

int LoopGraph::loop_count() const { return std::popcount(loop_mask()); }

uint64_t LoopGraph::loop_mask() const {
    uint64_t mask = 0;
    for (int v = 0; v < n_; ++v)
        if (loop(v)) mask |= bit(v);
    return mask;
}

uint64_t LoopGraph::vertex_mask() const {
    return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
}

Graph LoopGraph::strip_loops() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = adj_[v] & ~bit(v);
    return g;
}

Graph LoopGraph::simple() const {
    if (loop_mask() != 0)
        throw std::invalid_argument("graph has loops and cannot be treated as simple");
    return strip_loops();
}

Bigraph::Bigraph(Graph graph, std::vector<int> sides) : g(std::move(graph)), side(std::move(sides)) {
    if (static_cast<int>(side.size()) != g.n())
        throw std::invalid_argument("side vector length does not match graph order");
    for (int v = 0; v < g.n(); ++v)
        if (side[v] != 0 && side[v] != 1)
            throw std::invalid_argument("side labels must be 0 or 1");
    for (auto [u, v] : g.edges())
        if (side[u] == side[v])
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} does not cross sides");
}

uint64_t Bigraph::side_mask(int s) const {
    uint64_t mask = 0;
    for (int v = 0; v < g.n(); ++v)
        if (side[v] == s) mask |= bit(v);
    return mask;
}

int Bigraph::side_count(int s) const { return std::popcount(side_mask(s)); }

namespace {

// Walk parent chains from both ends of a same-color BFS edge up to their
// meeting point; the two chains plus the edge form an odd cycle.
std::vector<int> odd_cycle_from_conflict(const std::vector<int>& parent,
                                         const std::vector<int>& depth, int u, int v) {
    std::vector<int> up, vp;
    int a = u, b = v;
    while (depth[a] > depth[b]) { up.push_back(a); a = parent[a]; }
    while (depth[b] > depth[a]) { vp.push_back(b); b = parent[b]; }
    while (a != b) {
        up.push_back(a); a = parent[a];
        vp.push_back(b); b = parent[b];
    }
    up.push_back(a);
    std::reverse(vp.begin(), vp.end());
    up.insert(up.end(), vp.begin(), vp.end());
    return up;  // cycle as a vertex list; closing edge vp.back()->up.front() implied
}

} // namespace

GraphFacts analyze(const Graph& g) {
    GraphFacts f;
    f.n = g.n();
    f.degrees.resize(f.n);
    for (int v = 0; v < f.n; ++v) f.degrees[v] = g.degree(v);
    f.m = g.edge_count();
    if (f.n > 0) {
        f.min_degree = *std::min_element(f.degrees.begin(), f.degrees.end());
        f.max_degree = *std::max_element(f.degrees.begin(), f.degrees.end());
        if (f.min_degree == f.max_degree) f.regular_degree = f.min_degree;
    } else {
        f.regular_degree = 0;
    }

    // Components and 2-coloring in one BFS sweep.
    f.component_id.assign(f.n, -1);
    std::vector<int> color(f.n, -1), parent(f.n, -1), depth(f.n, 0);
    bool bipartite = true;
    for (int root = 0; root < f.n; ++root) {
        if (f.component_id[root] != -1) continue;
        int comp = f.components++;
        std::queue<int> q;
        f.component_id[root] = comp;
        color[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (f.component_id[v] == -1) {
                    f.component_id[v] = comp;
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (color[v] == color[u] && bipartite) {
                    bipartite = false;
                    f.odd_closed_walk = odd_cycle_from_conflict(parent, depth, u, v);
                }
            }
        }
    }
    if (bipartite) f.bipartition = color;

    // Girth: shortest cycle through any BFS root; the minimum over roots is
    // exact because a BFS from a vertex on a shortest cycle realizes it.
    std::optional<int> girth;
    std::vector<int> dist(f.n);
    for (int root = 0; root < f.n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (girth && 2 * dist[u] >= *girth) continue;  // no shorter cycle beyond here
            uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (!girth || len < *girth) girth = len;
                }
            }
        }
    }
    f.girth = girth;

    for (int u = 0; u < f.n && (f.triangle_free || f.c4_free); ++u) {
        for (int v = u + 1; v < f.n; ++v) {
            uint64_t common = g.neighbors(u) & g.neighbors(v);
            if (g.edge(u, v) && common) f.triangle_free = false;
            if (std::popcount(common) >= 2) f.c4_free = false;
        }
    }

    // Biregular: bipartite, every component has both side degrees constant,
    // and the unordered degree pair agrees across components.
    if (f.bipartition && f.n > 0 && f.min_degree >= 1) {
        std::optional<std::pair<int, int>> pair;
        bool ok = true;
        for (int comp = 0; comp < f.components && ok; ++comp) {
            int da = -1, db = -1;  // degree on color 0 / color 1 within comp
            for (int v = 0; v < f.n; ++v) {
                if (f.component_id[v] != comp) continue;
                int& d = color[v] == 0 ? da : db;
                if (d == -1) d = f.degrees[v];
                else if (d != f.degrees[v]) { ok = false; break; }
            }
            if (!ok) break;
            if (da == -1 || db == -1) { ok = false; break; }  // one-sided component
            auto p = std::minmax(da, db);
            if (!pair) pair = std::pair<int, int>(p.first, p.second);
            else if (*pair != std::pair<int, int>(p.first, p.second)) ok = false;
        }
        if (ok) f.biregular = pair;
    }

    return f;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const Graph& p : parts) total += p.n();
    Graph g(total);
    int base = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(base + u, base + v);
        base += p.n();
    }
    return g;
}

Graph disjoint_union(const Graph& g, int copies) {
    if (copies < 0) throw std::invalid_argument("copy count must be nonnegative");
    return disjoint_union(std::vector<Graph>(copies, g));
}

LoopGraph add_loops(const Graph& g) {
    LoopGraph h(g);
    for (int v = 0; v < g.n(); ++v) h.add_edge(v, v);
    return h;
}

LoopGraph looped_subgraph(const LoopGraph& h) { return induced_subgraph(h, h.loop_mask()); }

namespace {

std::vector<int> mask_vertices(uint64_t mask, int n) {
    std::vector<int> verts;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        if (v >= n) throw std::out_of_range("subgraph mask has bits beyond the graph order");
        verts.push_back(v);
    }
    return verts;
}

} // namespace

Graph induced_subgraph(const Graph& g, uint64_t mask) {
    std::vector<int> verts = mask_vertices(mask, g.n());
    Graph s(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.edge(verts[i], verts[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

LoopGraph induced_subgraph(const LoopGraph& h, uint64_t mask) {
    std::vector<int> verts = mask_vertices(mask, h.n());
    LoopGraph s(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i; j < verts.size(); ++j)
            if (h.edge(verts[i], verts[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

bool is_independent_set(const Graph& g, uint64_t mask) {
    for (uint64_t scan = mask; scan;) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (v >= g.n()) throw std::out_of_range("independent-set mask exceeds graph order");
        if (g.neighbors(v) & mask) return false;
    }
    return true;
}

Bigraph as_bigraph(const Graph& g) {
    GraphFacts f = analyze(g);
    if (!f.bipartition) throw std::invalid_argument("graph is not bipartite");
    if (f.components > 1)
        throw std::invalid_argument("bigraph conversion needs a connected graph; "
                                    "the 2-coloring is otherwise ambiguous");
    return Bigraph(g, *f.bipartition);
}

} // namespace exthom
