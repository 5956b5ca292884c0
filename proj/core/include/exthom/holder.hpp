#ifndef EXTHOM_HOLDER_HPP
#define EXTHOM_HOLDER_HPP

#include <vector>

#include "exthom/bignum.hpp"

namespace exthom {

/// A finite instance of the generalized Hölder inequality: coordinates
/// 0..n-1 with finite weighted spaces Ω_i, index sets A_1..A_m covering
/// every coordinate exactly d times, and a nonnegative table f_j over
/// Π_{i∈A_j} Ω_i (flattened row-major, coordinates ascending).
struct HolderInstance {
    std::vector<std::vector<int>> cover;
    std::vector<std::vector<Rational>> weights;  // weights[i][w], nonnegative
    std::vector<std::vector<Rational>> tables;   // tables[j], nonnegative
};

struct HolderResult {
    int d = 0;            // common cover multiplicity
    Rational lhs = 0;     // ∫ Π_j f_j(P_j(x)) dι
    Rational lhs_power = 0;  // lhs^d
    Rational rhs_power = 0;  // Π_j ‖f_j‖_d^d
    bool holds = false;      // lhs^d ≤ rhs_power
};

/// Computes both sides exactly in rationals; the d-th roots are avoided by
/// comparing lhs^d against the product of the d-th norm powers.
HolderResult generalized_holder_check(int n, const HolderInstance& inst);

} // namespace exthom

#endif
