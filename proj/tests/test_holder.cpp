#include <random>
#include <stdexcept>

#include "doctest.h"
#include "exthom/hom.hpp"
#include "exthom/holder.hpp"
#include "exthom/standard.hpp"
#include "helpers.hpp"

using namespace exthom;
using namespace exthom::testing;

namespace {

// The triangle instance: three coordinates, pairwise cover, each table the
// adjacency indicator of a loop-graph H on {0..m-1}. The weighted integral
// is then exactly hom(K_3, H).
HolderInstance triangle_instance(const LoopGraph& h) {
    int m = h.n();
    HolderInstance inst;
    inst.cover = {{0, 1}, {1, 2}, {0, 2}};
    inst.weights.assign(3, std::vector<Rational>(m, Rational(1)));
    std::vector<Rational> table(m * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) table[x * m + y] = h.edge(x, y) ? 1 : 0;
    inst.tables = {table, table, table};
    return inst;
}

} // namespace

TEST_SUITE("holder") {

TEST_CASE("triangle instances hold and compute triangle homs") {
    std::mt19937 rng(801);
    for (int i = 0; i < 30; ++i) {
        LoopGraph h = random_loopgraph(3, 0.5, 0.5, rng);
        HolderResult res = generalized_holder_check(3, triangle_instance(h));
        CHECK(res.d == 2);
        CHECK(res.lhs == Rational(brute_hom(complete(3), h)));
        CHECK(res.holds);
        CHECK(res.lhs_power == res.lhs * res.lhs);
    }
}

TEST_CASE("all-ones tables give exact equality") {
    for (int n : {1, 2, 3}) {
        HolderInstance inst;
        // cover each coordinate twice with singleton sets
        for (int i = 0; i < n; ++i) {
            inst.cover.push_back({i});
            inst.cover.push_back({i});
        }
        inst.weights.assign(n, {Rational(1), Rational(1)});
        inst.tables.assign(2 * n, {Rational(1), Rational(1)});
        HolderResult res = generalized_holder_check(n, inst);
        CHECK(res.d == 2);
        CHECK(res.holds);
        CHECK(res.lhs_power == res.rhs_power);  // exact tightness
    }
}

TEST_CASE("norm powers recover complete bipartite hom counts") {
    // with f(y_1..y_d) counting common neighbors, the d-th norm power is
    // hom(K_{d,d}, H); repeating one set d times makes the check tight
    for (int d : {2, 3}) {
        const LoopGraph h = h_wr();
        int m = h.n();
        HolderInstance inst;
        std::vector<int> full(d);
        for (int i = 0; i < d; ++i) full[i] = i;
        int cells = 1;
        for (int i = 0; i < d; ++i) cells *= m;
        std::vector<Rational> table(cells);
        for (int idx = 0; idx < cells; ++idx) {
            int rest = idx;
            uint64_t common = h.vertex_mask();
            for (int i = d - 1; i >= 0; --i) {
                int y = rest % m;
                rest /= m;
                common &= h.neighbors(y);
            }
            table[idx] = static_cast<long>(std::popcount(common));
        }
        for (int j = 0; j < d; ++j) {
            inst.cover.push_back(full);
            inst.tables.push_back(table);
        }
        inst.weights.assign(d, std::vector<Rational>(m, Rational(1)));
        HolderResult res = generalized_holder_check(d, inst);
        CHECK(res.d == d);
        CHECK(res.lhs == Rational(hom_count(complete_bipartite(d, d), h)));
        CHECK(res.holds);
        CHECK(res.lhs_power == res.rhs_power);
    }
}

TEST_CASE("validation rejects malformed instances") {
    HolderInstance good = triangle_instance(h_ind());
    CHECK_THROWS_AS((void)generalized_holder_check(0, good), std::invalid_argument);

    HolderInstance uneven = good;
    uneven.cover.pop_back();
    uneven.tables.pop_back();  // coordinates now covered 2,2,1 times
    CHECK_THROWS_AS((void)generalized_holder_check(3, uneven), std::invalid_argument);

    HolderInstance negative = good;
    negative.tables[0][0] = Rational(-1);
    CHECK_THROWS_AS((void)generalized_holder_check(3, negative), std::invalid_argument);

    HolderInstance badweight = good;
    badweight.weights[1][0] = Rational(-1, 2);
    CHECK_THROWS_AS((void)generalized_holder_check(3, badweight), std::invalid_argument);

    HolderInstance shorttable = good;
    shorttable.tables[2].pop_back();
    CHECK_THROWS_AS((void)generalized_holder_check(3, shorttable), std::invalid_argument);

    HolderInstance badset = good;
    badset.cover[0] = {1, 0};  // not strictly increasing
    CHECK_THROWS_AS((void)generalized_holder_check(3, badset), std::invalid_argument);

    HolderInstance outofrange = good;
    outofrange.cover[0] = {0, 3};
    CHECK_THROWS_AS((void)generalized_holder_check(3, outofrange), std::invalid_argument);
}

TEST_CASE("a genuinely slack instance") {
    // one coordinate covered twice, two different tables: plain Cauchy-Schwarz
    HolderInstance inst;
    inst.cover = {{0}, {0}};
    inst.weights = {{Rational(1), Rational(1)}};
    inst.tables = {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}};
    HolderResult res = generalized_holder_check(1, inst);
    CHECK(res.d == 2);
    CHECK(res.lhs == 4);           // 1*2 + 2*1
    CHECK(res.lhs_power == 16);
    CHECK(res.rhs_power == 25);    // (1+4)(4+1)
    CHECK(res.holds);
}

} // TEST_SUITE
