#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "exthom/enumerate.hpp"
#include "exthom/formats.hpp"
#include "exthom/standard.hpp"
#include "helpers.hpp"

using namespace exthom;
using namespace exthom::testing;

TEST_SUITE("formats") {

TEST_CASE("graph6 fixtures") {
    CHECK(to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(Graph(2)) == "A?");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(from_graph6("A_").edge(0, 1));
    CHECK(from_graph6("Ch") == path(4));
    CHECK(from_graph6("?") == Graph(0));
}

TEST_CASE("graph6 round trips") {
    std::mt19937 rng(301);
    for (const Graph& g : {Graph(0), Graph(1), petersen(), heawood(), complete(10)})
        CHECK(from_graph6(to_graph6(g)) == g);
    for (int n : {3, 7, 13, 40, 62}) {
        for (int i = 0; i < 10; ++i) {
            Graph g = random_graph(n, 0.3, rng);
            CHECK(from_graph6(to_graph6(g)) == g);
        }
    }
    for (const Graph& g : all_graphs(6)) CHECK(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 parse errors carry positions") {
    CHECK_THROWS_AS((void)from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS((void)from_graph6("A"), std::invalid_argument);           // truncated
    CHECK_THROWS_AS((void)from_graph6("A_X"), std::invalid_argument);         // trailing
    CHECK_THROWS_AS((void)from_graph6("\x1f\x1f"), std::invalid_argument);    // bad chars
    CHECK_THROWS_AS((void)from_graph6("A`"), std::invalid_argument);          // padding
    try {
        (void)from_graph6("A");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("graph6 streams and files") {
    std::vector<Graph> batch = {cycle(5), complete(4), Graph(1), petersen()};
    std::ostringstream out;
    write_graph6_lines(out, batch);
    std::istringstream in(out.str());
    CHECK(read_graph6_lines(in) == batch);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "exthom_formats_test";
    fs::create_directories(dir);
    fs::path file = dir / "batch.g6";
    write_graph6_file(file.string(), batch);
    CHECK(read_graph6_file(file.string()) == batch);
    CHECK_THROWS_AS((void)read_graph6_file((dir / "absent.g6").string()),
                    std::runtime_error);

    // multi-line parse errors name the offending line
    std::ofstream bad(dir / "bad.g6");
    bad << to_graph6(cycle(5)) << "\nA`\n";
    bad.close();
    try {
        (void)read_graph6_file((dir / "bad.g6").string());
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    fs::remove_all(dir);
}

TEST_CASE("lg round trips") {
    std::mt19937 rng(302);
    for (const LoopGraph& g :
         {h_ind(), h_wr(), two_loops(), loop_threshold_example(), LoopGraph(petersen()),
          LoopGraph(Graph(0)), path_with_loops(5, {2})})
        CHECK(from_lg(to_lg(g)) == g);
    for (int i = 0; i < 20; ++i) {
        LoopGraph g = random_loopgraph(8, 0.4, 0.3, rng);
        CHECK(from_lg(to_lg(g)) == g);
    }
}

TEST_CASE("lg parse errors") {
    CHECK_THROWS_AS((void)from_lg(""), std::invalid_argument);
    CHECK_THROWS_AS((void)from_lg("x\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)from_lg("2\n01\n"), std::invalid_argument);     // missing row
    CHECK_THROWS_AS((void)from_lg("2\n011\n110\n"), std::invalid_argument);  // width
    CHECK_THROWS_AS((void)from_lg("2\n0a\n10\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)from_lg("2\n01\n00\n"), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS((void)from_lg("99\n"), std::invalid_argument);         // order cap
    CHECK(from_lg("0\n") == LoopGraph(Graph(0)));
}

} // TEST_SUITE
