#ifndef EXTHOM_FORMATS_HPP
#define EXTHOM_FORMATS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "exthom/graph.hpp"

namespace exthom {

/// graph6 encoding of a simple graph (McKay's format, bit-exact).
std::string to_graph6(const Graph& g);

/// Parse one graph6 line. Throws std::invalid_argument with the offending
/// position on malformed input (bad header, bad character, wrong length,
/// nonzero padding).
Graph from_graph6(const std::string& line);

std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

/// File variants; reading throws std::runtime_error when the file is
/// missing, writing creates or truncates it.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

/// .lg loop-graph text: first line the order n, then n rows of n '0'/'1'
/// characters; diagonal entries are loops. Rejects asymmetry.
std::string to_lg(const LoopGraph& g);
LoopGraph from_lg(const std::string& text);

} // namespace exthom

#endif
