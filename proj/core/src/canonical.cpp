#include "exthom/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace exthom {

namespace {

// Cheap isomorphism-invariant per-vertex key used for the initial coloring:
// loop flag, degree, local triangle count, BFS layer profile. Splitting
// vertices up front keeps the refinement tree shallow on regular graphs.
std::vector<int64_t> vertex_keys(const LoopGraph& g, std::vector<std::vector<int>>& profiles) {
    int n = g.n();
    std::vector<int64_t> keys(n);
    profiles.assign(n, {});
    for (int v = 0; v < n; ++v) {
        uint64_t nb = g.neighbors(v) & ~bit(v);
        int triangles = 0;
        for (uint64_t rest = nb; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;  // rest now holds only neighbors above u
            triangles += std::popcount(g.neighbors(u) & rest);
        }
        // BFS layer sizes from v (loops do not affect distances).
        std::vector<int>& prof = profiles[v];
        uint64_t seen = bit(v), frontier = bit(v);
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f;) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(u) & ~bit(u);
            }
            next &= ~seen;
            seen |= next;
            prof.push_back(std::popcount(next));
            frontier = next;
        }
        prof.push_back(g.loop(v) ? 1 : 0);
        prof.push_back(std::popcount(g.neighbors(v)));
        prof.push_back(triangles);
        keys[v] = 0;  // rank assigned below
    }
    // Rank the profile tuples so cells can be ordered by a single integer.
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return profiles[a] < profiles[b]; });
    int64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && profiles[idx[i]] != profiles[idx[i - 1]]) ++rank;
        keys[idx[i]] = rank;
    }
    return keys;
}

// Ordered partition of the vertex set, kept as explicit cells.
using Partition = std::vector<std::vector<int>>;

struct Searcher {
    int n;
    std::vector<uint64_t> adj;

    std::string best_form;
    std::vector<int> best_order;
    std::string first_form;
    std::vector<int> first_order;
    std::vector<std::vector<int>> generators;  // automorphisms found en route

    // 1-WL refinement to a fixpoint. Cells split by the multiset of neighbor
    // counts into every current cell; fragment order is the (invariant)
    // lexicographic order of those count vectors.
    void refine(Partition& part) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<uint64_t> masks(part.size(), 0);
            for (size_t c = 0; c < part.size(); ++c)
                for (int v : part[c]) masks[c] |= bit(v);
            Partition next;
            next.reserve(part.size());
            for (const std::vector<int>& cell : part) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(part.size());
                    for (size_t c = 0; c < part.size(); ++c)
                        sig[c] = std::popcount(adj[v] & masks[c]);
                    sigs.emplace_back(std::move(sig), v);
                }
                std::stable_sort(sigs.begin(), sigs.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                size_t start = 0;
                for (size_t i = 1; i <= sigs.size(); ++i) {
                    if (i == sigs.size() || sigs[i].first != sigs[start].first) {
                        std::vector<int> frag;
                        for (size_t j = start; j < i; ++j) frag.push_back(sigs[j].second);
                        std::sort(frag.begin(), frag.end());
                        if (frag.size() != cell.size()) changed = true;
                        next.push_back(std::move(frag));
                        start = i;
                    }
                }
            }
            part = std::move(next);
        }
    }

    std::string encode(const std::vector<int>& order) const {
        std::string form(1, static_cast<char>(n));
        int acc = 0, nbits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                acc = acc << 1 | (adj[order[i]] >> order[j] & 1);
                if (++nbits == 8) {
                    form.push_back(static_cast<char>(acc));
                    acc = nbits = 0;
                }
            }
        if (nbits) form.push_back(static_cast<char>(acc << (8 - nbits)));
        return form;
    }

    // Permutation g with g(ref[k]) = leaf[k] is an automorphism whenever the
    // two leaf encodings agree.
    void record_automorphism(const std::vector<int>& ref, const std::vector<int>& leaf) {
        std::vector<int> g(n);
        bool identity = true;
        for (int k = 0; k < n; ++k) {
            g[ref[k]] = leaf[k];
            identity &= ref[k] == leaf[k];
        }
        if (!identity) generators.push_back(std::move(g));
    }

    void visit_leaf(const Partition& part) {
        std::vector<int> order;
        order.reserve(n);
        for (const std::vector<int>& cell : part) order.push_back(cell[0]);
        std::string form = encode(order);
        if (first_form.empty()) {
            first_form = form;
            first_order = order;
            best_form = form;
            best_order = order;
            return;
        }
        if (form == first_form) record_automorphism(first_order, order);
        else if (form == best_form) record_automorphism(best_order, order);
        if (form < best_form) {
            best_form = form;
            best_order = order;
        }
    }

    // Union-find orbits under the generators that fix `base` pointwise.
    std::vector<int> orbits_fixing(const std::vector<int>& base) const {
        std::vector<int> up(n);
        std::iota(up.begin(), up.end(), 0);
        auto find = [&](int x) {
            while (up[x] != x) x = up[x] = up[up[x]];
            return x;
        };
        for (const std::vector<int>& g : generators) {
            bool fixes = true;
            for (int b : base)
                if (g[b] != b) { fixes = false; break; }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(g[v]);
                if (a != b) up[a] = b;
            }
        }
        std::vector<int> root(n);
        for (int v = 0; v < n; ++v) root[v] = find(v);
        return root;
    }

    void search(Partition part, std::vector<int>& base) {
        refine(part);
        size_t target = part.size();
        for (size_t c = 0; c < part.size(); ++c)
            if (part[c].size() > 1) { target = c; break; }
        if (target == part.size()) {
            visit_leaf(part);
            return;
        }
        std::vector<int> tried;
        for (int v : part[target]) {
            // Skip candidates equivalent to an already-explored sibling under
            // the automorphisms that fix the current base.
            std::vector<int> root = orbits_fixing(base);
            bool dup = false;
            for (int u : tried)
                if (root[u] == root[v]) { dup = true; break; }
            if (dup) continue;
            tried.push_back(v);

            Partition child;
            child.reserve(part.size() + 1);
            for (size_t c = 0; c < target; ++c) child.push_back(part[c]);
            child.push_back({v});
            std::vector<int> rest;
            for (int u : part[target])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
            for (size_t c = target + 1; c < part.size(); ++c) child.push_back(part[c]);

            base.push_back(v);
            search(std::move(child), base);
            base.pop_back();
        }
    }
};

} // namespace

CanonicalResult canonical_result(const LoopGraph& g) {
    int n = g.n();
    if (n == 0) return {std::string(1, '\0'), {}};

    Searcher s;
    s.n = n;
    s.adj.resize(n);
    for (int v = 0; v < n; ++v) s.adj[v] = g.neighbors(v);

    std::vector<std::vector<int>> profiles;
    std::vector<int64_t> keys = vertex_keys(g, profiles);
    int64_t max_key = *std::max_element(keys.begin(), keys.end());
    Partition part;
    for (int64_t k = 0; k <= max_key; ++k) {
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (keys[v] == k) cell.push_back(v);
        if (!cell.empty()) part.push_back(std::move(cell));
    }

    std::vector<int> base;
    s.search(std::move(part), base);
    return {std::move(s.best_form), std::move(s.best_order)};
}

std::string canonical_form(const LoopGraph& g) { return canonical_result(g).form; }

std::string canonical_form(const Graph& g) { return canonical_form(LoopGraph(g)); }

LoopGraph canonical_graph(const LoopGraph& g) {
    CanonicalResult r = canonical_result(g);
    int n = g.n();
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[r.order[k]] = k;
    LoopGraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (g.edge(u, v)) out.add_edge(pos[u], pos[v]);
    return out;
}

Graph canonical_graph(const Graph& g) {
    return canonical_graph(LoopGraph(g)).simple();
}

bool is_isomorphic(const LoopGraph& a, const LoopGraph& b) {
    return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    return canonical_form(a) == canonical_form(b);
}

std::string form_to_hex(const std::string& form) {
    static const char* digits = "0123456789abcdef";
    std::string hex;
    hex.reserve(form.size() * 2);
    for (unsigned char c : form) {
        hex.push_back(digits[c >> 4]);
        hex.push_back(digits[c & 15]);
    }
    return hex;
}

} // namespace exthom
