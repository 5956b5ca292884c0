#include "exthom/holder.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace exthom {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("holder: " + what);
}

// Row-major index of the projection of x onto the ascending coordinate set.
std::size_t project_index(const std::vector<int>& coords,
                          const std::vector<int>& x,
                          const std::vector<std::size_t>& sizes) {
    std::size_t idx = 0;
    for (int i : coords) idx = idx * sizes[static_cast<std::size_t>(i)] +
                               static_cast<std::size_t>(x[static_cast<std::size_t>(i)]);
    return idx;
}

} // namespace

HolderResult generalized_holder_check(int n, const HolderInstance& inst) {
    if (n < 1) fail("need at least one coordinate");
    const auto un = static_cast<std::size_t>(n);
    if (inst.weights.size() != un) fail("need one weight vector per coordinate");
    if (inst.tables.size() != inst.cover.size()) fail("need one table per cover set");
    if (inst.cover.empty()) fail("cover is empty");

    std::vector<std::size_t> sizes(un);
    for (std::size_t i = 0; i < un; ++i) {
        if (inst.weights[i].empty()) fail("coordinate " + std::to_string(i) + " has an empty space");
        for (const Rational& w : inst.weights[i])
            if (w < 0) fail("negative weight on coordinate " + std::to_string(i));
        sizes[i] = inst.weights[i].size();
    }

    // Validate the cover: sorted distinct coordinates, every coordinate hit
    // the same number of times.
    std::vector<int> multiplicity(un, 0);
    for (std::size_t j = 0; j < inst.cover.size(); ++j) {
        const auto& a = inst.cover[j];
        if (a.empty()) fail("cover set " + std::to_string(j) + " is empty");
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] < 0 || a[k] >= n)
                fail("cover set " + std::to_string(j) + " mentions coordinate " +
                     std::to_string(a[k]) + " outside [0," + std::to_string(n) + ")");
            if (k > 0 && a[k] <= a[k - 1])
                fail("cover set " + std::to_string(j) + " must be strictly increasing");
            ++multiplicity[static_cast<std::size_t>(a[k])];
        }
        std::size_t shape = 1;
        for (int i : a) shape *= sizes[static_cast<std::size_t>(i)];
        if (inst.tables[j].size() != shape)
            fail("table " + std::to_string(j) + " has " + std::to_string(inst.tables[j].size()) +
                 " entries, expected " + std::to_string(shape));
        for (const Rational& v : inst.tables[j])
            if (v < 0) fail("negative entry in table " + std::to_string(j));
    }
    const int d = multiplicity[0];
    for (std::size_t i = 0; i < un; ++i)
        if (multiplicity[i] != d)
            fail("coordinate " + std::to_string(i) + " is covered " +
                 std::to_string(multiplicity[i]) + " times, coordinate 0 is covered " +
                 std::to_string(d) + " times");
    if (d < 1) fail("cover multiplicity must be positive");

    std::size_t total = 1;
    for (std::size_t s : sizes) {
        if (s > (std::size_t{1} << 24) / std::max<std::size_t>(total, 1))
            fail("product space too large");
        total *= s;
    }

    HolderResult result;
    result.d = d;

    // Left-hand side: integrate the product of the projected tables over the
    // full product space.
    std::vector<int> x(un, 0);
    for (std::size_t it = 0; it < total; ++it) {
        Rational term = 1;
        for (std::size_t i = 0; i < un && term != 0; ++i)
            term *= inst.weights[i][static_cast<std::size_t>(x[i])];
        for (std::size_t j = 0; j < inst.cover.size() && term != 0; ++j)
            term *= inst.tables[j][project_index(inst.cover[j], x, sizes)];
        result.lhs += term;
        for (std::size_t i = un; i-- > 0;) {
            if (++x[i] < static_cast<int>(sizes[i])) break;
            x[i] = 0;
        }
    }

    // Right-hand side: Π_j ‖f_j‖_d^d, each norm power a finite weighted sum
    // over the projected space.
    result.rhs_power = 1;
    for (std::size_t j = 0; j < inst.cover.size(); ++j) {
        const auto& a = inst.cover[j];
        Rational norm_power = 0;
        std::vector<int> y(a.size(), 0);
        const std::size_t shape = inst.tables[j].size();
        for (std::size_t it = 0; it < shape; ++it) {
            Rational term = 1;
            for (std::size_t k = 0; k < a.size(); ++k)
                term *= inst.weights[static_cast<std::size_t>(a[k])][static_cast<std::size_t>(y[k])];
            std::size_t idx = 0;
            for (std::size_t k = 0; k < a.size(); ++k)
                idx = idx * sizes[static_cast<std::size_t>(a[k])] + static_cast<std::size_t>(y[k]);
            term *= rat_pow(inst.tables[j][idx], d);
            norm_power += term;
            for (std::size_t k = a.size(); k-- > 0;) {
                if (++y[k] < static_cast<int>(sizes[static_cast<std::size_t>(a[k])])) break;
                y[k] = 0;
            }
        }
        result.rhs_power *= norm_power;
    }

    result.lhs_power = rat_pow(result.lhs, d);
    result.holds = result.lhs_power <= result.rhs_power;
    return result;
}

} // namespace exthom
