#include <filesystem>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "exthom/canonical.hpp"
#include "exthom/enumerate.hpp"
#include "exthom/formats.hpp"
#include "exthom/hom.hpp"
#include "exthom/report_io.hpp"
#include "exthom/scan.hpp"
#include "exthom/standard.hpp"

using namespace exthom;

namespace {

ScanReport run_scan(const std::string& id, const std::string& family, ScanParams p = {}) {
    return scan_conjecture(id, parse_family_spec(family), p);
}

} // namespace

TEST_SUITE("scan") {

TEST_CASE("catalog") {
    const auto& ids = scan_catalog();
    CHECK(ids.size() == 10);
    std::set<std::string> seen(ids.begin(), ids.end());
    for (const char* id :
         {"coloring_max", "color_double_cover", "potts_energy", "ind_fixed_size",
          "mat_fixed_size", "kahn_irregular", "galvin_irregular", "triangle_free_max",
          "girth_extrema", "fixture_planted"})
        CHECK(seen.count(id) == 1);
    CHECK_THROWS_AS((void)run_scan("no_such_conjecture", "d=3,n=4"),
                    std::invalid_argument);
}

TEST_CASE("planted fixture flags every graph") {
    ScanReport r = run_scan("fixture_planted", "d=3,connected,n=4");
    CHECK(r.conjecture_id == "fixture_planted");
    CHECK(r.graphs_checked == 1);
    CHECK(r.graphs_skipped == 0);
    CHECK_FALSE(r.held());
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].cmp.lhs == 1);
    CHECK(r.violations[0].cmp.rhs == 0);
    CHECK(verdict_of(r.violations[0].cmp) == BoundVerdict::violated);
    CHECK(from_graph6(r.violations[0].graph6) == canonical_graph(complete(4)));

    ScanReport many = run_scan("fixture_planted", "all,nmax=5");
    CHECK(many.graphs_checked == 53);
    CHECK(many.violations.size() == 53);
}

TEST_CASE("coloring maxima over cycles") {
    ScanParams p;
    p.q = 3;
    ScanReport r = run_scan("coloring_max", "d=2,connected,nmax=6", p);
    CHECK(r.held());
    CHECK(r.graphs_checked == 4);  // C_3 .. C_6
    CHECK(r.graphs_skipped == 0);
    CHECK(r.family == "d2_n0-6_connected");
    CHECK_THROWS_AS((void)run_scan("coloring_max", "d=2,nmax=6"), std::invalid_argument);
    CHECK_THROWS_AS((void)run_scan("coloring_max", "all,nmax=4", p),
                    std::invalid_argument);  // needs a degree family
}

TEST_CASE("double cover coloring comparison") {
    ScanParams p;
    p.q = 3;
    ScanReport r = run_scan("color_double_cover", "all,nmax=5", p);
    CHECK(r.held());
    CHECK(r.graphs_checked + r.graphs_skipped == 53);
}

TEST_CASE("potts energy comparison") {
    ScanParams p;
    p.q = 2;
    ScanReport r = run_scan("potts_energy", "d=2,connected,nmax=6", p);
    CHECK(r.held());
    CHECK(r.graphs_checked == 4);
    // default grid is 1/4, 1/2, 3/4
    ScanParams bad = p;
    bad.x_grid = {Rational(3, 2)};
    CHECK_THROWS_AS((void)run_scan("potts_energy", "d=2,connected,nmax=6", bad),
                    std::invalid_argument);
}

TEST_CASE("fixed size scanners skip inapplicable orders") {
    ScanReport r = run_scan("ind_fixed_size", "d=2,nmax=8");
    CHECK(r.held());
    CHECK(r.graphs_checked == 4);   // C_4 and the three 2-regular graphs on 8
    CHECK(r.graphs_skipped == 6);
    ScanReport m = run_scan("mat_fixed_size", "d=2,nmax=8");
    CHECK(m.held());
    CHECK(m.graphs_checked == 4);
    CHECK_THROWS_AS((void)run_scan("ind_fixed_size", "all,nmax=4"),
                    std::invalid_argument);
}

TEST_CASE("irregular kahn and galvin") {
    ScanReport r = run_scan("kahn_irregular", "all,nmax=6");
    CHECK(r.held());
    CHECK(r.graphs_checked == 155);
    CHECK(r.graphs_skipped == 54);  // graphs with isolated vertices

    ScanParams p;
    p.h = h_ind();
    ScanReport g = run_scan("galvin_irregular", "all,nmax=5", p);
    CHECK(g.held());
    // recompute the skip predicate: bipartite with no isolated vertices
    long long checkable = 0;
    for (const Graph& x : enumerate_family(parse_family_spec("all,nmax=5"))) {
        GraphFacts f = analyze(x);
        if (x.n() > 0 && f.min_degree >= 1 && f.bipartition) ++checkable;
    }
    CHECK(g.graphs_checked == checkable);
    CHECK(g.graphs_checked + g.graphs_skipped == 53);
    CHECK_THROWS_AS((void)run_scan("galvin_irregular", "all,nmax=5"),
                    std::invalid_argument);  // needs a target
}

TEST_CASE("triangle free maxima") {
    ScanParams p;
    p.h = h_ind();
    ScanReport r = run_scan("triangle_free_max", "d=3,connected,trianglefree,nmax=10", p);
    CHECK(r.held());
    CHECK(r.graphs_skipped == 0);
    // a family containing triangles marks them skipped instead of failing
    ScanReport mixed = run_scan("triangle_free_max", "d=3,connected,nmax=8", p);
    CHECK(mixed.graphs_skipped > 0);
}

TEST_CASE("girth extrema find the celebrated graphs") {
    ScanReport r = run_scan("girth_extrema", "d=3,connected,trianglefree,nmax=10");
    REQUIRE(r.argmin.has_value());
    REQUIRE(r.argmax.has_value());
    CHECK(from_graph6(r.argmin->graph6) == canonical_graph(petersen()));
    CHECK(r.argmin->value == 76);
    CHECK(from_graph6(r.argmax->graph6) == canonical_graph(complete_bipartite(3, 3)));
    CHECK(r.argmax->value == 15);
}

TEST_CASE("reports are byte-identical across worker counts") {
    for (const char* id : {"kahn_irregular", "girth_extrema"}) {
        ScanParams one;
        one.workers = 1;
        ScanParams four;
        four.workers = 4;
        std::string a = to_json(run_scan(id, "all,nmax=5", one));
        std::string b = to_json(run_scan(id, "all,nmax=5", four));
        CHECK(a == b);
    }
}

TEST_CASE("scans can reuse an enumeration cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "exthom_scan_cache_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    ScanParams p;
    p.cache_dir = dir.string();
    ScanReport first = run_scan("kahn_irregular", "all,nmax=5", p);
    REQUIRE(fs::exists(dir / "all_n0-5.g6"));
    ScanReport second = run_scan("kahn_irregular", "all,nmax=5", p);
    CHECK(to_json(first) == to_json(second));
    fs::remove_all(dir);
}

TEST_CASE("profile in plain mode recognizes the bipartite reference") {
    LoopGraph k2{path(2)};
    ScanReport r = maximizer_profile(2, parse_family_spec("d=2,connected,nmax=6"), k2);
    REQUIRE(r.profile.size() == 1);
    const ProfileColumn& col = r.profile[0];
    CHECK(col.k.empty());
    CHECK(col.ref_kdd == 2);   // hom(K_{2,2}, K_2)
    CHECK(col.ref_kd1 == 0);   // hom(K_3, K_2)
    CHECK(col.argmax_is_kdd);
    CHECK_FALSE(col.argmax_is_kd1);
    CHECK(col.cmp_vs_kdd == 0);
    CHECK(col.cmp_vs_kd1 > 0);
    REQUIRE(r.table.size() == 4);
    CHECK(from_graph6(r.table[col.argmax_row].graph6) == canonical_graph(cycle(4)));
}

TEST_CASE("profile grid mode multiplies per component") {
    ScanParams p;
    p.k_grid = {1, 3};
    LoopGraph k2{complete(2)};
    ScanReport r = maximizer_profile(2, parse_family_spec("d=2,nmax=8"), k2, p);
    REQUIRE(r.profile.size() == 2);
    CHECK(r.profile[0].k == "1");
    CHECK(r.profile[1].k == "3");
    // hom(C_4 + C_4, kK_2) = (2k)^2, and odd components zero the product out
    const Graph two_c4 = canonical_graph(disjoint_union(cycle(4), 2));
    const Graph c5_c3 = canonical_graph(disjoint_union({cycle(5), cycle(3)}));
    bool saw_even = false, saw_odd = false;
    for (const ProfileRow& row : r.table) {
        const Graph g = from_graph6(row.graph6);
        if (g == two_c4) {
            saw_even = true;
            CHECK(row.components == 2);
            CHECK(row.values == std::vector<BigCount>{4, 36});
        }
        if (g == c5_c3) {
            saw_odd = true;
            CHECK(row.values == std::vector<BigCount>{0, 0});
        }
    }
    CHECK(saw_even);
    CHECK(saw_odd);
    // grid mode demands the complete loopless target of matching order
    CHECK_THROWS_AS((void)maximizer_profile(2, parse_family_spec("d=2,nmax=6"), h_ind(), p),
                    std::invalid_argument);
    ScanParams negative;
    negative.k_grid = {0};
    CHECK_THROWS_AS((void)maximizer_profile(2, parse_family_spec("d=2,nmax=6"), k2,
                                            negative),
                    std::invalid_argument);
}

TEST_CASE("profile handles an empty family") {
    ScanReport r = maximizer_profile(3, parse_family_spec("d=3,connected,girth=5,nmax=8"),
                                     LoopGraph(complete(3)));
    CHECK(r.graphs_checked == 0);
    CHECK(r.table.empty());
    REQUIRE(r.profile.size() == 1);  // the column frame still carries the references
    CHECK(r.profile[0].ref_kdd == 42);  // hom(K_{3,3}, K_3)
    CHECK(r.profile[0].ref_kd1 == 0);   // K_4 is not 3-colorable
    bool noted = false;
    for (const std::string& n : r.notes) noted = noted || n == "empty family";
    CHECK(noted);
}

} // TEST_SUITE
