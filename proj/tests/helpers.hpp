// Brute-force oracles shared by the unit suites. Everything here recomputes
// the quantity under test from its definition, with no shortcuts, so the
// library implementations are checked against independent code paths.
#ifndef EXTHOM_TESTS_HELPERS_HPP
#define EXTHOM_TESTS_HELPERS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "exthom/bignum.hpp"
#include "exthom/graph.hpp"

namespace exthom::testing {

// Counts maps V(g) -> V(h) that send every edge (loops included) of g to an
// edge of h, by walking the full |V(h)|^|V(g)| product space.
inline BigCount brute_hom(const LoopGraph& g, const LoopGraph& h) {
    const int n = g.n(), m = h.n();
    if (n == 0) return 1;
    if (m == 0) return 0;
    std::vector<int> map(n, 0);
    BigCount total = 0;
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u; v < n && ok; ++v)
                if (g.edge(u, v) && !h.edge(map[u], map[v])) ok = false;
        if (ok) ++total;
        int i = 0;
        while (i < n && ++map[i] == m) map[i++] = 0;
        if (i == n) break;
    }
    return total;
}

inline BigCount brute_hom(const Graph& g, const LoopGraph& h) {
    return brute_hom(LoopGraph(g), h);
}

// Side-respecting homomorphism count between bigraphs, by brute force.
inline BigCount brute_bigraph_hom(const Bigraph& g, const Bigraph& h) {
    const int n = g.g.n(), m = h.g.n();
    if (n == 0) return 1;
    if (m == 0) return 0;
    std::vector<int> map(n, 0);
    BigCount total = 0;
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (g.side[u] != h.side[map[u]]) ok = false;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.g.edge(u, v) && !h.g.edge(map[u], map[v])) ok = false;
        if (ok) ++total;
        int i = 0;
        while (i < n && ++map[i] == m) map[i++] = 0;
        if (i == n) break;
    }
    return total;
}

// Independence-polynomial coefficients by scanning all 2^n vertex subsets.
inline std::vector<BigCount> brute_independence_coeffs(const Graph& g) {
    std::vector<BigCount> coeffs(g.n() + 1, 0);
    int top = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << g.n()); ++s) {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            if (s >> u & 1 && (g.neighbors(u) & s) != 0) ok = false;
        if (ok) {
            int k = std::popcount(s);
            coeffs[k] += 1;
            top = std::max(top, k);
        }
    }
    coeffs.resize(top + 1);
    return coeffs;
}

// Matching-polynomial coefficients by scanning all edge subsets.
inline std::vector<BigCount> brute_matching_coeffs(const Graph& g) {
    auto edges = g.edges();
    std::vector<BigCount> coeffs(g.n() / 2 + 1, 0);
    int top = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << edges.size()); ++s) {
        uint64_t used = 0;
        bool ok = true;
        int k = 0;
        for (size_t e = 0; e < edges.size() && ok; ++e) {
            if (!(s >> e & 1)) continue;
            uint64_t pair = bit(edges[e].first) | bit(edges[e].second);
            if (used & pair) ok = false;
            used |= pair;
            ++k;
        }
        if (ok) {
            coeffs[k] += 1;
            top = std::max(top, k);
        }
    }
    coeffs.resize(top + 1);
    return coeffs;
}

// Potts coefficients: coeffs[j] = number of q-colorings with exactly j
// monochromatic edges, by scanning all q^n colorings.
inline std::vector<BigCount> brute_potts_coeffs(const Graph& g, int q) {
    const int n = g.n();
    std::vector<BigCount> coeffs(g.edge_count() + 1, 0);
    if (n == 0) {
        coeffs.assign(1, 1);
        return coeffs;
    }
    std::vector<int> color(n, 0);
    auto edges = g.edges();
    int top = 0;
    while (true) {
        int mono = 0;
        for (auto [u, v] : edges)
            if (color[u] == color[v]) ++mono;
        coeffs[mono] += 1;
        top = std::max(top, mono);
        int i = 0;
        while (i < n && ++color[i] == q) color[i++] = 0;
        if (i == n) break;
    }
    coeffs.resize(top + 1);
    return coeffs;
}

inline Graph apply_perm(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

inline LoopGraph apply_perm(const LoopGraph& g, const std::vector<int>& perm) {
    LoopGraph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u; v < g.n(); ++v)
            if (g.edge(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

inline LoopGraph random_loopgraph(int n, double p_edge, double p_loop, std::mt19937& rng) {
    std::bernoulli_distribution edge(p_edge), loop(p_loop);
    LoopGraph g(n);
    for (int u = 0; u < n; ++u) {
        if (loop(rng)) g.add_edge(u, u);
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    }
    return g;
}

// All independent sets of g as bitmasks (order: ascending mask).
inline std::vector<uint64_t> brute_independent_sets(const Graph& g) {
    std::vector<uint64_t> sets;
    for (uint64_t s = 0; s < (uint64_t{1} << g.n()); ++s) {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            if (s >> u & 1 && (g.neighbors(u) & s) != 0) ok = false;
        if (ok) sets.push_back(s);
    }
    return sets;
}

} // namespace exthom::testing

#endif
