#ifndef EXTHOM_CANONICAL_HPP
#define EXTHOM_CANONICAL_HPP

#include <string>
#include <vector>

#include "exthom/graph.hpp"

namespace exthom {

/// Canonical labeling of a loop-graph.
/// `form` is a byte string equal across exactly the isomorphism class
/// (loops respected): one order byte, then the upper triangle of the
/// relabeled adjacency matrix (diagonal included) packed MSB-first.
/// `order[k]` is the original vertex placed at canonical position k.
struct CanonicalResult {
    std::string form;
    std::vector<int> order;
};

CanonicalResult canonical_result(const LoopGraph& g);

std::string canonical_form(const LoopGraph& g);
std::string canonical_form(const Graph& g);

/// The graph relabeled into canonical order.
LoopGraph canonical_graph(const LoopGraph& g);
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const LoopGraph& a, const LoopGraph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Lowercase hex of a canonical form, for report identifiers.
std::string form_to_hex(const std::string& form);

} // namespace exthom

#endif
