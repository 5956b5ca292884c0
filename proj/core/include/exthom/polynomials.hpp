#ifndef EXTHOM_POLYNOMIALS_HPP
#define EXTHOM_POLYNOMIALS_HPP

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "exthom/bignum.hpp"
#include "exthom/graph.hpp"

namespace exthom {

enum class PolyKind { independence, matching, potts };

/// Coefficients degree-ascending, trailing zeros trimmed.
/// independence: coefficient of λ^t is i_t(G).
/// matching:     coefficient of λ^t is m_t(G).
/// potts:        coefficient of x^j counts q-colorings with j monochromatic
///               edges, so evaluation at x = e^{−β} is the partition function.
struct CountPolynomial {
    PolyKind kind;
    std::vector<BigCount> coeffs;
};

/// Optional cross-call cache for the deletion recurrences, keyed by the
/// canonical form of the sub-piece (kind-prefixed). Safe to share between
/// threads; results are identical with or without it.
class PolyMemo {
public:
    bool lookup(const std::string& key, std::vector<BigCount>& out);
    void store(const std::string& key, const std::vector<BigCount>& value);
    size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::vector<BigCount>> map_;
};

CountPolynomial independence_polynomial(const Graph& g, PolyMemo* memo = nullptr);
CountPolynomial matching_polynomial(const Graph& g, PolyMemo* memo = nullptr);
CountPolynomial potts_polynomial(const Graph& g, int q);

BigCount coefficient(const CountPolynomial& p, int deg);
int degree(const CountPolynomial& p);
BigCount evaluate(const CountPolynomial& p, const BigCount& x);
Rational evaluate(const CountPolynomial& p, const Rational& x);

/// Convolution product / nonnegative power; both preserve `kind` of the
/// first argument. For independence and matching polynomials these realize
/// disjoint unions: P_{G ⊔ H} = P_G·P_H.
CountPolynomial poly_mul(const CountPolynomial& a, const CountPolynomial& b);
CountPolynomial poly_pow(const CountPolynomial& p, int e);

} // namespace exthom

#endif
