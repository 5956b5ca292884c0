#include "exthom/hom.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "exthom/polynomials.hpp"
#include "exthom/standard.hpp"

namespace exthom {

namespace {

// Backtracking hom counter over one connected piece of G, visiting vertices
// in BFS order from a maximum-degree root. cand[v] is the bitmask of H
// vertices still admissible for v; assigning a vertex intersects each later
// neighbor's mask with the image's H-neighborhood. Once the unassigned
// suffix is pairwise non-adjacent in G, the remaining choices are
// independent and the branch contributes a product of popcounts.
struct HomSearch {
    const Graph& g;
    const std::vector<uint64_t>& hadj;
    std::vector<int> order;
    std::vector<bool> suffix_free;  // order[k..] pairwise non-adjacent in G?
    std::vector<std::vector<uint64_t>> cand;  // per depth, per G-vertex

    HomSearch(const Graph& graph, const std::vector<uint64_t>& target_adj,
              const std::vector<int>& verts)
        : g(graph), hadj(target_adj) {
        // BFS from the max-degree vertex of this piece.
        int root = verts[0];
        for (int v : verts)
            if (g.degree(v) > g.degree(root)) root = v;
        uint64_t seen = bit(root);
        order.push_back(root);
        for (size_t head = 0; head < order.size(); ++head) {
            uint64_t nb = g.neighbors(order[head]) & ~seen;
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                seen |= bit(v);
                order.push_back(v);
            }
        }
        suffix_free.assign(order.size() + 1, true);
        uint64_t suffix = 0;
        for (size_t k = order.size(); k-- > 0;) {
            suffix_free[k] = suffix_free[k + 1] && (g.neighbors(order[k]) & suffix) == 0;
            suffix |= bit(order[k]);
        }
        cand.assign(order.size() + 1, std::vector<uint64_t>(g.n(), 0));
    }

    BigCount run(const std::vector<uint64_t>& init) {
        cand[0] = init;
        return descend(0);
    }

    BigCount descend(size_t depth) {
        if (suffix_free[depth]) {
            BigCount prod = 1;
            for (size_t k = depth; k < order.size(); ++k)
                prod *= std::popcount(cand[depth][order[k]]);
            return prod;
        }
        int u = order[depth];
        BigCount total = 0;
        uint64_t choices = cand[depth][u];
        while (choices) {
            int h = std::countr_zero(choices);
            choices &= choices - 1;
            cand[depth + 1] = cand[depth];
            bool dead = false;
            uint64_t later = g.neighbors(u);
            for (size_t k = depth + 1; k < order.size() && !dead; ++k) {
                int w = order[k];
                if (later >> w & 1) {
                    cand[depth + 1][w] &= hadj[h];
                    dead = cand[depth + 1][w] == 0;
                }
            }
            if (!dead) total += descend(depth + 1);
        }
        return total;
    }
};

std::vector<std::vector<int>> component_vertex_lists(const Graph& g) {
    GraphFacts f = analyze(g);
    std::vector<std::vector<int>> comps(f.components);
    for (int v = 0; v < g.n(); ++v) comps[f.component_id[v]].push_back(v);
    return comps;
}

BigCount hom_with_candidates(const Graph& g, const std::vector<uint64_t>& hadj,
                             const std::vector<uint64_t>& init) {
    BigCount total = 1;
    for (const std::vector<int>& verts : component_vertex_lists(g)) {
        HomSearch search(g, hadj, verts);
        total *= search.run(init);
        if (total == 0) break;
    }
    return total;
}

} // namespace

BigCount hom_count(const Graph& g, const LoopGraph& h) {
    if (g.n() == 0) return 1;
    if (h.n() == 0) return 0;
    std::vector<uint64_t> hadj(h.n());
    for (int v = 0; v < h.n(); ++v) hadj[v] = h.neighbors(v);
    std::vector<uint64_t> init(g.n(), h.vertex_mask());
    return hom_with_candidates(g, hadj, init);
}

BigCount bigraph_hom_count(const Bigraph& g, const Bigraph& h) {
    if (g.g.n() == 0) return 1;
    if (h.g.n() == 0) return 0;
    std::vector<uint64_t> hadj(h.g.n());
    for (int v = 0; v < h.g.n(); ++v) hadj[v] = h.g.neighbors(v);
    uint64_t sides[2] = {h.side_mask(0), h.side_mask(1)};
    std::vector<uint64_t> init(g.g.n());
    for (int v = 0; v < g.g.n(); ++v) init[v] = sides[g.side[v]];
    return hom_with_candidates(g.g, hadj, init);
}

BigCount independent_set_count(const Graph& g) {
    return evaluate(independence_polynomial(g), BigCount(1));
}

BigCount perfect_matching_count(const Graph& g) {
    if (g.n() % 2 != 0) return 0;
    CountPolynomial m = matching_polynomial(g);
    return coefficient(m, g.n() / 2);
}

BigCount coloring_count(const Graph& g, int q) {
    if (q < 0) throw std::invalid_argument("coloring_count: negative q");
    if (g.n() == 0) return 1;
    if (q == 0) return 0;
    return hom_count(g, LoopGraph(complete(q)));
}

BigCount hom_count_disjoint_cliques(const Graph& g, int k, int d) {
    if (k < 0) throw std::invalid_argument("hom_count_disjoint_cliques: negative k");
    if (g.n() == 0) return 1;
    LoopGraph kd(complete(d));
    BigCount total = 1;
    for (const std::vector<int>& verts : component_vertex_lists(g)) {
        uint64_t mask = 0;
        for (int v : verts) mask |= bit(v);
        total *= k * hom_count(induced_subgraph(g, mask), kd);
        if (total == 0) break;
    }
    return total;
}

} // namespace exthom
