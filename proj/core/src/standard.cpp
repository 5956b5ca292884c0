#include "exthom/standard.hpp"

#include <stdexcept>

namespace exthom {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative side");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph heawood() {
    Graph g(14);
    for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
    for (int i = 1; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    return g;
}

Graph lex_graph(int n, int m) {
    if (m < 0 || m > n * (n - 1) / 2)
        throw std::invalid_argument("lex_graph: edge count out of range");
    Graph g(n);
    int placed = 0;
    for (int u = 0; u < n && placed < m; ++u)
        for (int v = u + 1; v < n && placed < m; ++v) {
            g.add_edge(u, v);
            ++placed;
        }
    return g;
}

LoopGraph h_ind() {
    LoopGraph h(2);
    h.add_edge(0, 0);
    h.add_edge(0, 1);
    return h;
}

LoopGraph h_wr() {
    LoopGraph h(3);
    for (int v = 0; v < 3; ++v) h.add_edge(v, v);
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    return h;
}

LoopGraph two_loops() {
    LoopGraph h(2);
    h.add_edge(0, 0);
    h.add_edge(1, 1);
    return h;
}

LoopGraph path_with_loops(int n, const std::vector<int>& loop_positions) {
    LoopGraph h(path(n));
    for (int v : loop_positions) h.add_edge(v, v);
    return h;
}

LoopGraph loop_threshold_example() {
    LoopGraph h(5);
    h.add_edge(0, 0);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(0, 3);
    h.add_edge(1, 1);
    return h;
}

namespace {

std::vector<int> parse_args(const std::string& spec, size_t colon) {
    std::vector<int> args;
    size_t pos = colon + 1;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size() || tok.empty()) throw std::invalid_argument(tok);
            args.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad graph spec '" + spec + "': integer expected, got '" +
                                        tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return args;
}

[[noreturn]] void bad_arity(const std::string& spec, const char* expect) {
    throw std::invalid_argument("bad graph spec '" + spec + "': expected " + std::string(expect));
}

} // namespace

LoopGraph parse_graph_spec(const std::string& spec) {
    if (spec == "petersen") return petersen();
    if (spec == "heawood") return heawood();
    if (spec == "H_ind") return h_ind();
    if (spec == "H_WR") return h_wr();
    if (spec == "two_loops") return two_loops();
    if (spec == "LT5") return loop_threshold_example();

    size_t colon = spec.find(':');
    if (colon == std::string::npos || colon == 0)
        throw std::invalid_argument("unknown graph spec '" + spec + "'");
    std::string head = spec.substr(0, colon);
    std::vector<int> args = parse_args(spec, colon);

    if (head == "K") {
        if (args.size() == 1) return complete(args[0]);
        if (args.size() == 2) return complete_bipartite(args[0], args[1]);
        bad_arity(spec, "K:n or K:a,b");
    }
    if (head == "C") {
        if (args.size() != 1) bad_arity(spec, "C:n");
        return cycle(args[0]);
    }
    if (head == "P") {
        if (args.size() != 1) bad_arity(spec, "P:n");
        return path(args[0]);
    }
    if (head == "L") {
        if (args.size() != 2) bad_arity(spec, "L:n,m");
        return lex_graph(args[0], args[1]);
    }
    throw std::invalid_argument("unknown graph spec '" + spec + "'");
}

} // namespace exthom
