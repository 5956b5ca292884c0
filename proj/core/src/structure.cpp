#include "exthom/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace exthom {

namespace {

// Staircase test: under the given ordering, every row of the reordered
// adjacency matrix must be a prefix of 1s, with non-increasing lengths.
bool staircase_under(const LoopGraph& h, const std::vector<int>& order) {
    int n = h.n();
    int prev_len = n;
    for (int i = 0; i < n; ++i) {
        int len = 0;
        while (len < n && h.edge(order[i], order[len])) ++len;
        for (int j = len; j < n; ++j)
            if (h.edge(order[i], order[j])) return false;  // gap then a 1
        if (len > prev_len) return false;
        prev_len = len;
    }
    return true;
}

} // namespace

LoopThresholdVerdict is_loop_threshold(const LoopGraph& h) {
    int n = h.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (h.loop(a) != h.loop(b)) return h.loop(a);
        return std::popcount(h.neighbors(a)) > std::popcount(h.neighbors(b));
    });
    if (staircase_under(h, order)) return {ThresholdStatus::yes, order};

    if (n > 8) return {ThresholdStatus::unknown, {}};
    std::iota(order.begin(), order.end(), 0);
    do {
        if (staircase_under(h, order)) return {ThresholdStatus::yes, order};
    } while (std::next_permutation(order.begin(), order.end()));
    return {ThresholdStatus::no, {}};
}

LoopGraph bst_graph(const LoopGraph& h) {
    int n = h.n();
    long long pairs = static_cast<long long>(n) * n;
    if (pairs > kMaxVertices)
        throw std::invalid_argument("bst graph on " + std::to_string(pairs) +
                                    " vertex pairs exceeds the " + std::to_string(kMaxVertices) +
                                    "-vertex limit");
    LoopGraph b(static_cast<int>(pairs));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int u2 = 0; u2 < n; ++u2)
                for (int v2 = 0; v2 < n; ++v2) {
                    int i = u * n + v, j = u2 * n + v2;
                    if (j < i) continue;
                    if (h.edge(u, u2) && h.edge(v, v2) &&
                        (!h.edge(u, v2) || !h.edge(u2, v)))
                        b.add_edge(i, j);
                }
    return b;
}

BstVerdict is_bipartite_swapping_target(const LoopGraph& h) {
    LoopGraph b = bst_graph(h);
    BstVerdict verdict;
    uint64_t loops = b.loop_mask();
    if (loops) {
        // A loop is an odd closed walk of length one.
        verdict.is_target = false;
        verdict.odd_closed_walk = std::vector<int>{std::countr_zero(loops)};
        return verdict;
    }
    GraphFacts f = analyze(b.strip_loops());
    if (f.bipartition) {
        verdict.is_target = true;
        verdict.coloring = f.bipartition;
    } else {
        verdict.is_target = false;
        verdict.odd_closed_walk = f.odd_closed_walk;
    }
    return verdict;
}

Graph double_cover(const Graph& g) {
    int n = g.n();
    if (2 * n > kMaxVertices)
        throw std::invalid_argument("double cover exceeds the vertex limit");
    Graph d(2 * n);
    for (auto [u, v] : g.edges()) {
        d.add_edge(u, n + v);
        d.add_edge(v, n + u);
    }
    return d;
}

namespace {

// 2-color each component of the graph on V(G) whose edges are `bad`;
// returns per-component side masks, or nullopt on an odd cycle.
std::optional<std::vector<std::pair<uint64_t, uint64_t>>> bad_components(
    int n, const std::vector<std::pair<int, int>>& bad) {
    std::vector<uint64_t> adj(n, 0);
    for (auto [u, v] : bad) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    std::vector<int> color(n, -1);
    std::vector<std::pair<uint64_t, uint64_t>> comps;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1 || adj[root] == 0) continue;  // isolated: no constraint
        uint64_t side[2] = {0, 0};
        std::vector<int> queue{root};
        color[root] = 0;
        side[0] |= bit(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            uint64_t nb = adj[u];
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    side[color[v]] |= bit(v);
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
        comps.emplace_back(side[0], side[1]);
    }
    return comps;
}

uint64_t swap_on(int n, uint64_t set, uint64_t a) {
    uint64_t keep = set & ~(a | a << n);
    uint64_t lifted = (set & a) << n;        // copy 0 -> copy 1 on A
    uint64_t dropped = set >> n & a;         // copy 1 -> copy 0 on A
    return keep | lifted | dropped;
}

uint64_t low_mask(int n) { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

} // namespace

SwapCertificate swap_injection(const Graph& g, uint64_t s) {
    int n = g.n();
    if (s & ~low_mask(2 * n))
        throw std::invalid_argument("swap_injection: set has bits beyond the two copies");
    uint64_t s0 = s & low_mask(n), s1 = s >> n;
    if (!is_independent_set(g, s0) || !is_independent_set(g, s1))
        throw std::invalid_argument("swap_injection: set is not independent in 2G");

    SwapCertificate cert;
    for (auto [u, v] : g.edges()) {
        bool cross_uv = (s0 >> u & 1) && (s1 >> v & 1);
        bool cross_vu = (s0 >> v & 1) && (s1 >> u & 1);
        if (cross_uv || cross_vu) cert.bad_edges.emplace_back(u, v);
    }
    // The bad-edge graph is bipartite: a vertex present in both copies of S
    // has no S-occupied neighbor in either copy, so it is isolated here.
    auto comps = bad_components(n, cert.bad_edges);
    if (!comps) throw std::logic_error("swap_injection: bad-edge graph not bipartite");
    for (auto [x, y] : *comps) cert.swap_set |= std::min(x, y);
    cert.image = swap_on(n, s, cert.swap_set);
    if (!is_independent_set(double_cover(g), cert.image))
        throw std::logic_error("swap_injection: image not independent in the double cover");
    return cert;
}

std::optional<uint64_t> swap_injection_inverse(const Graph& g, uint64_t t) {
    int n = g.n();
    if (t & ~low_mask(2 * n))
        throw std::invalid_argument("swap_injection_inverse: set has bits beyond the cover");
    if (!is_independent_set(double_cover(g), t))
        throw std::invalid_argument("swap_injection_inverse: set not independent in G × K_2");

    uint64_t t0 = t & low_mask(n), t1 = t >> n;
    std::vector<std::pair<int, int>> bad;
    for (auto [u, v] : g.edges()) {
        bool same0 = (t0 >> u & 1) && (t0 >> v & 1);
        bool same1 = (t1 >> u & 1) && (t1 >> v & 1);
        if (same0 || same1) bad.emplace_back(u, v);
    }
    auto comps = bad_components(n, bad);
    if (!comps) return std::nullopt;  // outside the injection's image
    uint64_t a = 0;
    for (auto [x, y] : *comps) a |= std::min(x, y);
    uint64_t s = swap_on(n, t, a);
    uint64_t s0 = s & low_mask(n), s1 = s >> n;
    if (!is_independent_set(g, s0) || !is_independent_set(g, s1))
        throw std::logic_error("swap_injection_inverse: preimage not independent in 2G");
    return s;
}

namespace {

void enumerate_bigraph_homs(const Bigraph& b, const Bigraph& a, int v, std::vector<int>& image,
                            std::vector<std::vector<int>>& out) {
    if (v == b.g.n()) {
        out.push_back(image);
        return;
    }
    for (int w = 0; w < a.g.n(); ++w) {
        if (a.side[w] != b.side[v]) continue;
        bool ok = true;
        uint64_t nb = b.g.neighbors(v);
        while (nb && ok) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (u < v && !a.g.edge(image[u], w)) ok = false;
        }
        if (!ok) continue;
        image[v] = w;
        enumerate_bigraph_homs(b, a, v + 1, image, out);
    }
}

} // namespace

LoopGraph bigraph_hom_target(const Bigraph& a, const Bigraph& b) {
    std::vector<std::vector<int>> homs;
    std::vector<int> image(b.g.n());
    enumerate_bigraph_homs(b, a, 0, image, homs);
    if (homs.size() > static_cast<size_t>(kMaxVertices))
        throw std::invalid_argument("bigraph hom target on " + std::to_string(homs.size()) +
                                    " homomorphisms exceeds the " +
                                    std::to_string(kMaxVertices) + "-vertex limit");

    std::vector<std::pair<int, int>> edges = b.g.edges();
    int m = static_cast<int>(homs.size());
    LoopGraph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            bool adjacent = true;
            for (auto [u, v] : edges) {
                if (!a.g.edge(homs[i][u], homs[j][v]) || !a.g.edge(homs[i][v], homs[j][u])) {
                    adjacent = false;
                    break;
                }
            }
            if (adjacent) h.add_edge(i, j);
        }
    return h;
}

} // namespace exthom
