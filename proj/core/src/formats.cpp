#include "exthom/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace exthom {

namespace {

[[noreturn]] void parse_fail(const char* format, size_t pos, const std::string& what) {
    throw std::invalid_argument(std::string(format) + " parse error at position " +
                                std::to_string(pos) + ": " + what);
}

} // namespace

std::string to_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // 63 <= n <= 258047: '~' then three 6-bit groups, big-endian.
        out.push_back('~');
        out.push_back(static_cast<char>(63 + (n >> 12 & 63)));
        out.push_back(static_cast<char>(63 + (n >> 6 & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(const std::string& line) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > line.size())
            parse_fail("graph6", line.size(), "unexpected end of input");
    };
    auto group = [&]() {
        need(1);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            parse_fail("graph6", pos, "character out of graph6 range");
        ++pos;
        return static_cast<int>(c - 63);
    };

    need(1);
    long long n;
    if (line[0] == '~') {
        ++pos;
        long long a = group(), b = group(), c = group();
        n = a << 12 | b << 6 | c;
    } else {
        n = group();
    }
    if (n > kMaxVertices)
        parse_fail("graph6", 0,
                   "order " + std::to_string(n) + " exceeds the " +
                       std::to_string(kMaxVertices) + "-vertex limit");

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    int acc = 0, have = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                acc = group();
                have = 6;
            }
            if (acc >> (have - 1) & 1) g.add_edge(u, v);
            --have;
        }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        parse_fail("graph6", pos - 1, "nonzero padding bits");
    if (pos != line.size())
        parse_fail("graph6", pos,
                   "trailing characters after " + std::to_string(nbits) + " adjacency bits");
    return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    return read_graph6_lines(in);
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph6 file: " + path);
    write_graph6_lines(out, graphs);
}

std::string to_lg(const LoopGraph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) out << (g.edge(u, v) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

LoopGraph from_lg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) parse_fail("lg", 0, "missing order line");
    int n;
    try {
        size_t used = 0;
        n = std::stoi(line, &used);
        if (used != line.size()) throw std::invalid_argument(line);
    } catch (const std::exception&) {
        parse_fail("lg", 0, "order line is not an integer: '" + line + "'");
    }
    if (n < 0 || n > kMaxVertices)
        parse_fail("lg", 0, "order " + std::to_string(n) + " out of range");

    LoopGraph g(n);
    for (int u = 0; u < n; ++u) {
        if (!std::getline(in, line)) parse_fail("lg", u + 1, "missing adjacency row");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != n)
            parse_fail("lg", u + 1,
                       "row has " + std::to_string(line.size()) + " entries, expected " +
                           std::to_string(n));
        for (int v = 0; v < n; ++v) {
            if (line[v] != '0' && line[v] != '1')
                parse_fail("lg", u + 1, std::string("bad character '") + line[v] + "'");
            if (line[v] == '1' && v >= u) g.add_edge(u, v);
        }
    }
    // A second pass confirms symmetry: every '1' must have its mirror.
    std::istringstream again(text);
    std::getline(again, line);
    for (int u = 0; u < n; ++u) {
        std::getline(again, line);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        for (int v = 0; v < n; ++v)
            if ((line[v] == '1') != g.edge(u, v))
                parse_fail("lg", u + 1,
                           "asymmetric entry at (" + std::to_string(u) + "," + std::to_string(v) +
                               ")");
    }
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) parse_fail("lg", n + 1, "trailing content after adjacency rows");
    }
    return g;
}

} // namespace exthom
