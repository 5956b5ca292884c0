#ifndef EXTHOM_OBSERVABLES_HPP
#define EXTHOM_OBSERVABLES_HPP

#include <vector>

#include "exthom/bignum.hpp"
#include "exthom/graph.hpp"

namespace exthom {

/// Hard-core occupancy fraction α_G(λ) = λ·P'_G(λ) / (v(G)·P_G(λ)).
Rational occupancy_fraction(const Graph& g, const Rational& lambda);

/// p_k = Pr(|I ∩ N(v)| = k) for hard-core I at fugacity λ and uniform v,
/// k = 0..Δ(G), by exact summation over all independent sets.
std::vector<Rational> neighbor_occupancy_distribution(const Graph& g, const Rational& lambda);

/// Expected monochromatic-edge density of the q-state Potts model at
/// x = e^{−β} ∈ (0,1]: U = Σ_j j·c_j·x^j / (v(G)·Σ_j c_j·x^j).
Rational potts_internal_energy(const Graph& g, int q, const Rational& x);

/// Maximum of p_0 over the occupancy-method linear constraints
/// (probabilities sum to one, the neighbor identity, and the descending
/// chain (d−k+1)·λ·p_{k−1} ≥ k·p_k), attained where the chain is tight.
Rational occupancy_lp_optimum(int d, const Rational& lambda);

} // namespace exthom

#endif
