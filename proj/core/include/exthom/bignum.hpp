#ifndef EXTHOM_BIGNUM_HPP
#define EXTHOM_BIGNUM_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exthom {

// All counts are exact arbitrary-precision integers; all observables are
// exact rationals. Floating point never participates in a verdict.
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigCount big_pow(const BigCount& base, unsigned long exp) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    r.canonicalize();
    return r;
}

inline BigCount pow2(unsigned long exp) { return big_pow(2, exp); }

inline BigCount factorial(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigCount binomial(unsigned long n, unsigned long k) {
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Serialized form used throughout reports: "3" or "-3/7", canonical.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

/// Ordering of a^(1/va) vs b^(1/vb) computed exactly as a^vb vs b^va.
/// a, b must be nonnegative. Returns -1, 0, or +1.
int compare_normalized(const BigCount& a, unsigned va, const BigCount& b, unsigned vb);

/// Same cross-power comparison for nonnegative rational bases.
int compare_normalized(const Rational& a, unsigned va, const Rational& b, unsigned vb);

} // namespace exthom

#endif
