#include "exthom/observables.hpp"

#include <bit>
#include <stdexcept>

#include "exthom/polynomials.hpp"

namespace exthom {

Rational occupancy_fraction(const Graph& g, const Rational& lambda) {
    if (g.n() == 0) throw std::invalid_argument("occupancy_fraction: empty graph");
    if (sgn(lambda) < 0) throw std::domain_error("occupancy_fraction: negative fugacity");
    CountPolynomial p = independence_polynomial(g);
    Rational num = 0, den = 0;  // num = λ·P'(λ) = Σ t·c_t·λ^t, den = P(λ)
    Rational power = 1;
    for (size_t t = 0; t < p.coeffs.size(); ++t) {
        Rational term = Rational(p.coeffs[t]) * power;
        num += Rational(static_cast<long>(t)) * term;
        den += term;
        power *= lambda;
    }
    return num / (Rational(g.n()) * den);
}

namespace {

// Visit every independent set of g (as a bitmask): branch on the lowest
// remaining vertex, either excluded or included with its closed
// neighborhood removed.
template <typename Fn>
void for_each_independent_set(const Graph& g, Fn&& fn) {
    std::vector<std::pair<uint64_t, uint64_t>> stack{{0, g.vertex_mask()}};
    std::vector<uint64_t> closed(g.n());
    for (int v = 0; v < g.n(); ++v) closed[v] = g.neighbors(v) | bit(v);
    while (!stack.empty()) {
        auto [chosen, remaining] = stack.back();
        stack.pop_back();
        if (remaining == 0) {
            fn(chosen);
            continue;
        }
        int v = std::countr_zero(remaining);
        stack.push_back({chosen, remaining & ~bit(v)});
        stack.push_back({chosen | bit(v), remaining & ~closed[v]});
    }
}

} // namespace

std::vector<Rational> neighbor_occupancy_distribution(const Graph& g, const Rational& lambda) {
    if (g.n() == 0)
        throw std::invalid_argument("neighbor_occupancy_distribution: empty graph");
    if (sgn(lambda) < 0)
        throw std::domain_error("neighbor_occupancy_distribution: negative fugacity");
    int max_deg = 0;
    for (int v = 0; v < g.n(); ++v) max_deg = std::max(max_deg, g.degree(v));

    std::vector<Rational> powers(g.n() + 1);
    powers[0] = 1;
    for (int s = 1; s <= g.n(); ++s) powers[s] = powers[s - 1] * lambda;

    std::vector<Rational> weight_by_k(max_deg + 1, Rational(0));
    Rational partition = 0;
    for_each_independent_set(g, [&](uint64_t set) {
        const Rational& w = powers[std::popcount(set)];
        partition += w;
        for (int v = 0; v < g.n(); ++v)
            weight_by_k[std::popcount(g.neighbors(v) & set)] += w;
    });

    Rational denom = Rational(g.n()) * partition;
    std::vector<Rational> p(max_deg + 1);
    for (int k = 0; k <= max_deg; ++k) p[k] = weight_by_k[k] / denom;
    return p;
}

Rational potts_internal_energy(const Graph& g, int q, const Rational& x) {
    if (g.n() == 0) throw std::invalid_argument("potts_internal_energy: empty graph");
    if (sgn(x) <= 0 || x > 1)
        throw std::domain_error("potts_internal_energy: x must lie in (0,1]");
    CountPolynomial z = potts_polynomial(g, q);
    Rational num = 0, den = 0, power = 1;
    for (size_t j = 0; j < z.coeffs.size(); ++j) {
        Rational term = Rational(z.coeffs[j]) * power;
        num += Rational(static_cast<long>(j)) * term;
        den += term;
        power *= x;
    }
    return num / (Rational(g.n()) * den);
}

Rational occupancy_lp_optimum(int d, const Rational& lambda) {
    if (d < 1) throw std::invalid_argument("occupancy_lp_optimum: d must be positive");
    if (sgn(lambda) < 0) throw std::domain_error("occupancy_lp_optimum: negative fugacity");
    // With the descending chain tight, p_k = t·r_k where r_k = λ^{k−1}·C(d,k)/d;
    // the neighbor identity pins t against p_0 and the total sum pins p_0.
    Rational t1 = 0, t2 = 0, power = 1;
    for (int k = 1; k <= d; ++k) {
        Rational r = power * Rational(binomial(d, k)) / Rational(d);
        t1 += r;
        t2 += Rational(k) * r;
        power *= lambda;
    }
    Rational one_plus = Rational(1) + lambda;
    return one_plus * t2 / (one_plus * t2 + Rational(d) * lambda * t1);
}

} // namespace exthom
