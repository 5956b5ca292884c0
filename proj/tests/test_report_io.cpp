#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "exthom/bounds.hpp"
#include "exthom/polynomials.hpp"
#include "exthom/report_io.hpp"
#include "exthom/scan.hpp"
#include "exthom/standard.hpp"
#include "exthom/structure.hpp"

using namespace exthom;

namespace {

bool same_comparison(const Comparison& a, const Comparison& b) {
    return a.relation == b.relation && a.rational_mode == b.rational_mode && a.lhs == b.lhs &&
           a.rhs == b.rhs && a.rlhs == b.rlhs && a.rrhs == b.rrhs && a.lhs_exp == b.lhs_exp &&
           a.rhs_exp == b.rhs_exp;
}

bool same_report(const BoundReport& a, const BoundReport& b) {
    return a.bound_id == b.bound_id && a.graph_id == b.graph_id &&
           a.params_text == b.params_text && same_comparison(a.cmp, b.cmp) &&
           a.verdict == b.verdict;
}

} // namespace

TEST_SUITE("report_io") {

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(BoundVerdict::holds)) == "holds");
    CHECK(std::string(verdict_name(BoundVerdict::tight)) == "tight");
    CHECK(std::string(verdict_name(BoundVerdict::violated)) == "violated");
}

TEST_CASE("bound report round trip") {
    const BoundReport r = check_bound(cycle(4), "zhao_max_ind", {});
    const std::string text = to_json(r);
    CHECK(same_report(r, bound_report_from_json(text)));
    CHECK(to_json(bound_report_from_json(text)) == text);

    // counts serialize as decimal strings, never JSON numbers
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("comparison").at("lhs").is_string());
    CHECK(j.at("comparison").at("lhs").get<std::string>() == "7");
    CHECK(j.at("comparison").at("mode") == "integer");
    CHECK(j.at("verdict") == "tight");

    BoundParams p;
    p.lambda = Rational(1, 2);
    const BoundReport rat = check_bound(complete_bipartite(2, 2), "indep_poly_max", p);
    const std::string rtext = to_json(rat);
    CHECK(same_report(rat, bound_report_from_json(rtext)));
    const auto rj = nlohmann::json::parse(rtext);
    CHECK(rj.at("comparison").at("mode") == "rational");
    CHECK(rj.at("comparison").at("lhs").is_string());
    CHECK(rj.at("params") == "d=2, lambda=1/2");
}

TEST_CASE("bound report vector round trip") {
    BoundParams p;
    p.q = 3;
    std::vector<BoundReport> reports = {
        check_bound(cycle(4), "zhao_max_ind", {}),
        check_bound(petersen(), "color_min", p),
        check_bound(complete(4), "ind_min", {}),
    };
    const std::string text = to_json(reports);
    const std::vector<BoundReport> back = bound_reports_from_json(text);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(same_report(reports[i], back[i]));
    CHECK(to_json(back) == text);
    CHECK(nlohmann::json::parse(text).is_array());
    CHECK_THROWS_AS((void)bound_reports_from_json(to_json(reports[0])),
                    std::invalid_argument);  // object where array expected
}

TEST_CASE("scan report round trips through its JSON") {
    // violations populated
    ScanReport planted =
        scan_conjecture("fixture_planted", parse_family_spec("d=3,connected,n=4"));
    const std::string ptext = to_json(planted);
    CHECK(to_json(scan_report_from_json(ptext)) == ptext);
    const auto pj = nlohmann::json::parse(ptext);
    CHECK(pj.at("held") == false);
    CHECK(pj.at("argmin").is_null());
    CHECK(pj.at("violations").size() == 1);

    // extrema populated
    ScanReport girth =
        scan_conjecture("girth_extrema", parse_family_spec("d=3,connected,nmax=6"));
    const std::string gtext = to_json(girth);
    CHECK(to_json(scan_report_from_json(gtext)) == gtext);
    const auto gj = nlohmann::json::parse(gtext);
    CHECK(gj.at("argmin").at("value").is_string());
    CHECK(gj.at("argmax").at("v").is_number());

    // table and profile populated
    ScanParams params;
    params.k_grid = {1, 2};
    ScanReport prof = maximizer_profile(2, parse_family_spec("d=2,connected,nmax=6"),
                                        LoopGraph(complete(2)), params);
    const std::string ftext = to_json(prof);
    CHECK(to_json(scan_report_from_json(ftext)) == ftext);
    const auto fj = nlohmann::json::parse(ftext);
    CHECK(fj.at("table").size() == 4);
    CHECK(fj.at("profile").size() == 2);
    CHECK(fj.at("table").at(0).at("values").at(0).is_string());
    CHECK(fj.at("profile").at(0).at("ref_kdd").is_string());
}

TEST_CASE("polynomial round trip") {
    const CountPolynomial p = independence_polynomial(cycle(5));
    const std::string text = to_json(p);
    const CountPolynomial back = polynomial_from_json(text);
    CHECK(back.kind == PolyKind::independence);
    CHECK(back.coeffs == p.coeffs);
    CHECK(nlohmann::json::parse(text).at("kind") == "independence");

    CountPolynomial big{PolyKind::potts, {1, big_pow(7, 40)}};
    const CountPolynomial bigback = polynomial_from_json(to_json(big));
    CHECK(bigback.kind == PolyKind::potts);
    CHECK(bigback.coeffs[1] == big_pow(7, 40));

    const CountPolynomial m = polynomial_from_json(to_json(matching_polynomial(cycle(4))));
    CHECK(m.kind == PolyKind::matching);
}

TEST_CASE("swap certificate and bst verdict serialization") {
    const Graph prism = Graph::from_edges(
        6, {{0, 1}, {1, 3}, {2, 3}, {0, 2}, {0, 4}, {2, 4}, {4, 5}, {1, 5}, {3, 5}});
    const SwapCertificate cert = swap_injection(prism, 2322);
    const auto j = nlohmann::json::parse(to_json(cert));
    CHECK(j.at("bad_edges").size() == 3);
    CHECK(j.at("swap_set") == nlohmann::json::parse("[1,4]"));
    CHECK(j.at("image") == nlohmann::json::parse("[7,8,10,11]"));

    const auto yes = nlohmann::json::parse(to_json(is_bipartite_swapping_target(h_ind())));
    CHECK(yes.at("is_target") == true);
    CHECK(yes.at("coloring").is_array());
    CHECK(yes.at("odd_closed_walk").is_null());
    const auto no = nlohmann::json::parse(to_json(is_bipartite_swapping_target(h_wr())));
    CHECK(no.at("is_target") == false);
    CHECK(no.at("coloring").is_null());
    CHECK(no.at("odd_closed_walk").is_array());
}

TEST_CASE("malformed documents throw invalid_argument") {
    CHECK_THROWS_AS((void)bound_report_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS((void)bound_report_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS((void)bound_report_from_json(R"({"bound_id":"x"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)scan_report_from_json("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS((void)polynomial_from_json(R"({"kind":"zeta","coefficients":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)polynomial_from_json(R"({"kind":"potts","coefficients":["x"]})"),
                    std::invalid_argument);

    // a verdict outside the enum is rejected even in valid JSON
    BoundReport ok = check_bound(cycle(4), "zhao_max_ind", {});
    std::string text = to_json(ok);
    const std::string needle = "\"tight\"";
    text.replace(text.find(needle), needle.size(), "\"sideways\"");
    CHECK_THROWS_AS((void)bound_report_from_json(text), std::invalid_argument);
}

TEST_CASE("csv for bound reports") {
    BoundParams p;
    p.lambda = Rational(1, 2);
    std::vector<BoundReport> reports = {
        check_bound(cycle(4), "zhao_max_ind", {}),
        check_bound(complete_bipartite(2, 2), "indep_poly_max", p),
    };
    const std::string csv = to_csv(reports);
    REQUIRE(csv.substr(0, csv.find('\n')) ==
            "bound_id,graph_id,params,verdict,relation,mode,lhs,lhs_exp,rhs,rhs_exp");
    // the comma inside the parameter text forces quoting
    CHECK(csv.find("\"d=2, lambda=1/2\"") != std::string::npos);
    CHECK(csv.find("zhao_max_ind," + reports[0].graph_id + ",d=2,tight,le,integer,7,4,7,4") !=
          std::string::npos);
    // one header plus one line per report
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("csv for scan reports") {
    ScanReport planted =
        scan_conjecture("fixture_planted", parse_family_spec("d=3,connected,n=4"));
    const std::string vcsv = to_csv(planted);
    CHECK(vcsv.substr(0, vcsv.find('\n')) ==
          "graph_id,graph6,detail,relation,mode,lhs,lhs_exp,rhs,rhs_exp");
    CHECK(vcsv.find("planted violation (self-test)") != std::string::npos);

    ScanParams params;
    params.k_grid = {1, 2};
    ScanReport prof = maximizer_profile(2, parse_family_spec("d=2,connected,nmax=6"),
                                        LoopGraph(complete(2)), params);
    const std::string tcsv = to_csv(prof);
    CHECK(tcsv.substr(0, tcsv.find('\n')) == "graph_id,graph6,v,components,value_k1,value_k2");
    CHECK(std::count(tcsv.begin(), tcsv.end(), '\n') == 5);

    ScanReport plain = maximizer_profile(2, parse_family_spec("d=2,connected,nmax=6"),
                                         LoopGraph(path(2)));
    const std::string pcsv = to_csv(plain);
    CHECK(pcsv.substr(0, pcsv.find('\n')) == "graph_id,graph6,v,components,value");
}

} // TEST_SUITE
