#include <random>

#include "doctest.h"
#include "exthom/enumerate.hpp"
#include "exthom/hom.hpp"
#include "exthom/standard.hpp"
#include "helpers.hpp"

using namespace exthom;
using namespace exthom::testing;

TEST_SUITE("hom") {

TEST_CASE("fixture values") {
    CHECK(hom_count(cycle(4), h_ind()) == 7);
    CHECK(hom_count(petersen(), h_ind()) == 76);
    CHECK(hom_count(cycle(5), h_ind()) == 11);
    CHECK(hom_count(cycle(4), h_wr()) == 35);
    CHECK(hom_count(complete(4), h_ind()) == 5);
    CHECK(hom_count(cycle(5), LoopGraph(complete(3))) == 30);  // proper 3-colorings
    CHECK(independent_set_count(complete_bipartite(3, 3)) == 15);
    CHECK(independent_set_count(complete_bipartite(2, 2)) == 7);
    CHECK(coloring_count(cycle(5), 3) == 30);
    CHECK(coloring_count(complete(4), 4) == 24);
    CHECK(coloring_count(complete(4), 3) == 0);
    CHECK(perfect_matching_count(complete(4)) == 3);
    CHECK(perfect_matching_count(complete_bipartite(3, 3)) == 6);
    CHECK(perfect_matching_count(cycle(6)) == 2);
    CHECK(perfect_matching_count(cycle(5)) == 0);
    CHECK(perfect_matching_count(petersen()) == 6);
}

TEST_CASE("edge cases") {
    CHECK(hom_count(Graph(0), h_wr()) == 1);
    CHECK(hom_count(Graph(0), LoopGraph(Graph(0))) == 1);
    CHECK(hom_count(path(2), LoopGraph(Graph(0))) == 0);
    CHECK(hom_count(Graph(3), h_ind()) == 8);       // no edges: all maps
    CHECK(independent_set_count(Graph(0)) == 1);    // just the empty set
    CHECK(perfect_matching_count(Graph(0)) == 1);
    CHECK(perfect_matching_count(Graph(1)) == 0);   // odd order
    CHECK(coloring_count(Graph(2), 3) == 9);
}

TEST_CASE("connected components multiply") {
    // maps into the two-looped-points target choose one point per component
    CHECK(hom_count(disjoint_union(cycle(3), 2), two_loops()) == 4);
    CHECK(hom_count(disjoint_union({path(2), cycle(4), Graph(1)}), two_loops()) == 8);
    CHECK(hom_count(petersen(), two_loops()) == 2);
}

TEST_CASE("brute force agreement on random instances") {
    std::mt19937 rng(401);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(5, 0.45, rng);
        LoopGraph h = random_loopgraph(3, 0.5, 0.5, rng);
        CHECK(hom_count(g, h) == brute_hom(g, h));
    }
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(4, 0.5, rng);
        LoopGraph h = random_loopgraph(4, 0.4, 0.4, rng);
        CHECK(hom_count(g, h) == brute_hom(g, h));
    }
}

TEST_CASE("independent sets and colorings against brute force") {
    std::mt19937 rng(402);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(6, 0.4, rng);
        CHECK(independent_set_count(g) ==
              BigCount(static_cast<long>(brute_independent_sets(g).size())));
        CHECK(coloring_count(g, 3) == brute_hom(g, LoopGraph(complete(3))));
    }
}

TEST_CASE("perfect matchings against the matching-subset oracle") {
    std::mt19937 rng(403);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(6, 0.5, rng);
        auto coeffs = brute_matching_coeffs(g);
        BigCount pm = coeffs.size() > 3 ? coeffs[3] : BigCount(0);
        CHECK(perfect_matching_count(g) == pm);
    }
}

TEST_CASE("bigraph homomorphisms respect sides") {
    Bigraph c6 = as_bigraph(cycle(6));
    Bigraph k33 = as_bigraph(complete_bipartite(3, 3));
    Bigraph k2 = as_bigraph(path(2));
    CHECK(bigraph_hom_count(c6, k33) == brute_bigraph_hom(c6, k33));
    CHECK(bigraph_hom_count(k2, k33) == 9);     // 3 x 3 side-respecting choices
    CHECK(bigraph_hom_count(c6, k2) == 1);
    CHECK(bigraph_hom_count(k2, c6) == brute_bigraph_hom(k2, c6));
    std::mt19937 rng(404);
    for (int i = 0; i < 20; ++i) {
        // random bipartite graphs with fixed sides
        Graph a(5), b(4);
        std::bernoulli_distribution flip(0.5);
        std::vector<int> sa = {0, 0, 0, 1, 1}, sb = {0, 0, 1, 1};
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (sa[u] != sa[v] && flip(rng)) a.add_edge(u, v);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                if (sb[u] != sb[v] && flip(rng)) b.add_edge(u, v);
        Bigraph ba(a, sa), bb(b, sb);
        CHECK(bigraph_hom_count(ba, bb) == brute_bigraph_hom(ba, bb));
    }
}

TEST_CASE("disjoint clique targets") {
    std::mt19937 rng(405);
    for (int d : {2, 3}) {
        for (int k : {1, 2, 3}) {
            LoopGraph target{disjoint_union(complete(d), k)};
            for (int i = 0; i < 8; ++i) {
                Graph g = random_graph(5, 0.35, rng);
                CHECK(hom_count_disjoint_cliques(g, k, d) == hom_count(g, target));
            }
            CHECK(hom_count_disjoint_cliques(disjoint_union(cycle(3), 2), k, d) ==
                  hom_count(disjoint_union(cycle(3), 2), target));
        }
    }
}

} // TEST_SUITE
