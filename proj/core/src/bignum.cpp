#include "exthom/bignum.hpp"

namespace exthom {

int compare_normalized(const BigCount& a, unsigned va, const BigCount& b, unsigned vb) {
    if (sgn(a) < 0 || sgn(b) < 0)
        throw std::domain_error("compare_normalized: negative base");
    // Zeros short-circuit so we never raise 0 to the 0th power ambiguously.
    if (a == 0 && b == 0) return 0;
    if (a == 0) return -1;
    if (b == 0) return 1;
    BigCount lhs = big_pow(a, vb);
    BigCount rhs = big_pow(b, va);
    return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

int compare_normalized(const Rational& a, unsigned va, const Rational& b, unsigned vb) {
    if (sgn(a) < 0 || sgn(b) < 0)
        throw std::domain_error("compare_normalized: negative base");
    if (sgn(a) == 0 && sgn(b) == 0) return 0;
    if (sgn(a) == 0) return -1;
    if (sgn(b) == 0) return 1;
    Rational lhs = rat_pow(a, vb);
    Rational rhs = rat_pow(b, va);
    int c = cmp(lhs, rhs);
    return c < 0 ? -1 : (c == 0 ? 0 : 1);
}

} // namespace exthom
