#include "exthom/polynomials.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "exthom/canonical.hpp"

namespace exthom {

bool PolyMemo::lookup(const std::string& key, std::vector<BigCount>& out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
}

void PolyMemo::store(const std::string& key, const std::vector<BigCount>& value) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, value);
}

size_t PolyMemo::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

namespace {

using Coeffs = std::vector<BigCount>;

void trim(Coeffs& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1, BigCount(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

void add_into(Coeffs& a, const Coeffs& b) {
    if (b.size() > a.size()) a.resize(b.size(), BigCount(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

// a += λ^shift · b
void add_shifted(Coeffs& a, const Coeffs& b, size_t shift) {
    if (b.size() + shift > a.size()) a.resize(b.size() + shift, BigCount(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

// Connected pieces of the subgraph induced by mask.
std::vector<uint64_t> component_masks(const std::vector<uint64_t>& adj, uint64_t mask) {
    std::vector<uint64_t> comps;
    uint64_t left = mask;
    while (left) {
        uint64_t comp = bit(std::countr_zero(left));
        for (;;) {
            uint64_t grown = comp;
            uint64_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grown |= adj[v] & mask;
            }
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

int pivot_max_degree(const std::vector<uint64_t>& adj, uint64_t mask) {
    int best = -1, best_deg = -1;
    uint64_t scan = mask;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int deg = std::popcount(adj[v] & mask);
        if (deg > best_deg) {
            best = v;
            best_deg = deg;
        }
    }
    return best;
}

struct PolyBuilder {
    const Graph& g;
    std::vector<uint64_t> adj;
    PolyMemo* memo;
    char kind_tag;

    PolyBuilder(const Graph& graph, PolyMemo* m, char tag) : g(graph), memo(m), kind_tag(tag) {
        adj.resize(g.n());
        for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    }

    Coeffs with_components(uint64_t mask) {
        Coeffs total{BigCount(1)};
        for (uint64_t comp : component_masks(adj, mask)) total = mul(total, connected(comp));
        return total;
    }

    Coeffs connected(uint64_t comp) {
        std::string key;
        if (memo) {
            key = kind_tag + canonical_form(induced_subgraph(g, comp));
            Coeffs cached;
            if (memo->lookup(key, cached)) return cached;
        }
        Coeffs result = recurse(comp);
        if (memo) memo->store(key, result);
        return result;
    }

    virtual Coeffs recurse(uint64_t comp) = 0;
    virtual ~PolyBuilder() = default;
};

// P(G) = P(G − v) + λ·P(G − N[v]) on a maximum-degree pivot.
struct IndBuilder : PolyBuilder {
    using PolyBuilder::PolyBuilder;
    Coeffs recurse(uint64_t comp) override {
        if (comp == 0) return {BigCount(1)};
        if ((comp & (comp - 1)) == 0) return {BigCount(1), BigCount(1)};  // one vertex
        int v = pivot_max_degree(adj, comp);
        Coeffs out = with_components(comp & ~bit(v));
        Coeffs taken = with_components(comp & ~(adj[v] | bit(v)));
        add_shifted(out, taken, 1);
        return out;
    }
};

// M(G) = M(G − v) + λ·Σ_{u ∈ N(v)} M(G − u − v) on a maximum-degree pivot.
struct MatchBuilder : PolyBuilder {
    using PolyBuilder::PolyBuilder;
    Coeffs recurse(uint64_t comp) override {
        if (comp == 0 || (comp & (comp - 1)) == 0) return {BigCount(1)};
        int v = pivot_max_degree(adj, comp);
        Coeffs out = with_components(comp & ~bit(v));
        uint64_t nb = adj[v] & comp;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            add_shifted(out, with_components(comp & ~(bit(u) | bit(v))), 1);
        }
        return out;
    }
};

} // namespace

CountPolynomial independence_polynomial(const Graph& g, PolyMemo* memo) {
    IndBuilder b(g, memo, 'I');
    Coeffs c = b.with_components(g.vertex_mask());
    trim(c);
    return {PolyKind::independence, std::move(c)};
}

CountPolynomial matching_polynomial(const Graph& g, PolyMemo* memo) {
    MatchBuilder b(g, memo, 'M');
    Coeffs c = b.with_components(g.vertex_mask());
    trim(c);
    return {PolyKind::matching, std::move(c)};
}

namespace {

// Enumerate set partitions of V(G) into at most q blocks (restricted-growth
// order), weighting each by the falling factorial q(q−1)···(q−B+1) — the
// number of colorings inducing that partition — and tallying monochromatic
// edges incrementally.
void potts_rec(const Graph& g, int q, int v, std::vector<uint64_t>& blocks, int mono,
               Coeffs& out) {
    if (v == g.n()) {
        BigCount weight = 1;
        for (size_t b = 0; b < blocks.size(); ++b) weight *= q - static_cast<int>(b);
        if (static_cast<int>(out.size()) <= mono) out.resize(mono + 1, BigCount(0));
        out[mono] += weight;
        return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
        int extra = std::popcount(g.neighbors(v) & blocks[b]);
        blocks[b] |= bit(v);
        potts_rec(g, q, v + 1, blocks, mono + extra, out);
        blocks[b] &= ~bit(v);
    }
    if (static_cast<int>(blocks.size()) < q) {
        blocks.push_back(bit(v));
        potts_rec(g, q, v + 1, blocks, mono, out);
        blocks.pop_back();
    }
}

} // namespace

CountPolynomial potts_polynomial(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("potts_polynomial: q must be positive");
    Coeffs out{BigCount(0)};
    std::vector<uint64_t> blocks;
    if (g.n() == 0) out[0] = 1;  // the empty coloring
    else potts_rec(g, q, 0, blocks, 0, out);
    trim(out);
    return {PolyKind::potts, std::move(out)};
}

BigCount coefficient(const CountPolynomial& p, int deg) {
    if (deg < 0 || deg >= static_cast<int>(p.coeffs.size())) return 0;
    return p.coeffs[deg];
}

int degree(const CountPolynomial& p) { return static_cast<int>(p.coeffs.size()) - 1; }

BigCount evaluate(const CountPolynomial& p, const BigCount& x) {
    BigCount acc = 0;
    for (size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + p.coeffs[i];
    return acc;
}

Rational evaluate(const CountPolynomial& p, const Rational& x) {
    Rational acc = 0;
    for (size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + Rational(p.coeffs[i]);
    return acc;
}

CountPolynomial poly_mul(const CountPolynomial& a, const CountPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {a.kind, {}};
    std::vector<BigCount> out(a.coeffs.size() + b.coeffs.size() - 1, BigCount(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return {a.kind, std::move(out)};
}

CountPolynomial poly_pow(const CountPolynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    CountPolynomial acc{p.kind, {BigCount(1)}};
    for (int i = 0; i < e; ++i) acc = poly_mul(acc, p);
    return acc;
}

} // namespace exthom
