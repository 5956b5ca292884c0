#include "exthom/products.hpp"

#include <stdexcept>
#include <string>

namespace exthom {

namespace {

void check_product_order(long long count, const char* what) {
    if (count > kMaxVertices)
        throw std::invalid_argument(std::string(what) + " would have " + std::to_string(count) +
                                    " vertices, beyond the " + std::to_string(kMaxVertices) +
                                    "-vertex limit");
}

} // namespace

LoopGraph tensor_product(const LoopGraph& a, const LoopGraph& b) {
    long long count = static_cast<long long>(a.n()) * b.n();
    check_product_order(count, "tensor product");
    int nb = b.n();
    LoopGraph p(static_cast<int>(count));
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < nb; ++v)
            for (int u2 = u; u2 < a.n(); ++u2)
                for (int v2 = 0; v2 < nb; ++v2) {
                    int i = u * nb + v, j = u2 * nb + v2;
                    if (j < i) continue;
                    if (a.edge(u, u2) && b.edge(v, v2)) p.add_edge(i, j);
                }
    return p;
}

Graph tensor_product(const Graph& a, const Graph& b) {
    // Loopless factors cannot create loops: (u,v)~(u,v) needs loops at u and v.
    return tensor_product(LoopGraph(a), LoopGraph(b)).simple();
}

LoopGraph exponentiate(const LoopGraph& h, const Graph& g) {
    long long count = 1;
    for (int k = 0; k < g.n(); ++k) {
        count *= h.n();
        check_product_order(count, "graph power");
        if (count == 0) break;
    }
    int nmaps = static_cast<int>(count);
    int nh = h.n();

    // digit(i, k) = value of map i at vertex k of G, f(0) most significant.
    std::vector<std::vector<int>> digit(nmaps, std::vector<int>(g.n()));
    for (int i = 0; i < nmaps; ++i) {
        int rem = i;
        for (int k = g.n() - 1; k >= 0; --k) {
            digit[i][k] = rem % nh;
            rem /= nh;
        }
    }

    std::vector<std::pair<int, int>> edges = g.edges();
    LoopGraph p(nmaps);
    for (int i = 0; i < nmaps; ++i)
        for (int j = i; j < nmaps; ++j) {
            bool adjacent = true;
            for (auto [u, v] : edges) {
                if (!h.edge(digit[i][u], digit[j][v]) || !h.edge(digit[i][v], digit[j][u])) {
                    adjacent = false;
                    break;
                }
            }
            if (adjacent) p.add_edge(i, j);
        }
    return p;
}

LoopGraph extended_line_graph(const Graph& h) {
    std::vector<std::pair<int, int>> edges = h.edges();
    check_product_order(static_cast<long long>(edges.size()), "extended line graph");
    int m = static_cast<int>(edges.size());
    LoopGraph l(m);
    for (int i = 0; i < m; ++i) {
        l.add_edge(i, i);
        auto [a, b] = edges[i];
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = edges[j];
            bool touch = a == c || a == d || b == c || b == d;
            bool matched = (h.edge(a, c) && h.edge(b, d)) || (h.edge(a, d) && h.edge(b, c));
            if (touch || matched) l.add_edge(i, j);
        }
    }
    return l;
}

} // namespace exthom
