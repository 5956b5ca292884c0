#ifndef EXTHOM_ENUMERATE_HPP
#define EXTHOM_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "exthom/graph.hpp"

namespace exthom {

/// Describes a finite family of graphs, one representative per isomorphism
/// class. Either a regular family (degree set) or the unrestricted
/// all-graphs mode; constraint flags narrow the family further.
struct FamilySpec {
    std::optional<int> degree;
    int nmin = 0;
    int nmax = -1;  // inclusive; negative = unset
    bool connected = false;
    bool bipartite = false;
    bool triangle_free = false;
    bool c4_free = false;
    std::optional<int> min_girth;
    bool all_graphs_mode = false;
};

/// Parses a comma-separated spec such as "d=3,connected,nmax=12".
/// Tokens: d=K, n=K, nmin=K, nmax=K, connected, bipartite, trianglefree,
/// c4free, girth=K, all.
FamilySpec parse_family_spec(const std::string& text);

/// Stable human-readable key identifying the family (used for cache files).
std::string family_spec_key(const FamilySpec& spec);

/// Size caps guarding against accidentally huge enumerations.
struct EnumerationCaps {
    int cubic = 14;         // d = 3
    int quartic = 11;       // d = 4
    int all_graphs = 8;     // unrestricted mode
    int low_degree = 16;    // d <= 2
    int high_degree = 10;   // d >= 5
};

/// All graphs in the family, exactly one per isomorphism class, in a
/// deterministic order. Throws std::invalid_argument on infeasible or
/// cap-exceeding specs.
std::vector<Graph> enumerate_family(const FamilySpec& spec,
                                    const EnumerationCaps& caps = {});

/// Connected d-regular graphs on exactly n vertices (one per class).
std::vector<Graph> connected_regular_graphs(int n, int d, const FamilySpec& flags = {});

/// One representative per isomorphism class of all simple graphs on n
/// vertices (n = 0 gives the single empty graph).
std::vector<Graph> all_graphs(int n, const EnumerationCaps& caps = {});

/// Like enumerate_family but backed by a graph6 line file under cache_dir,
/// keyed by family_spec_key. The cached sequence preserves generation order.
std::vector<Graph> enumerate_family_cached(const FamilySpec& spec,
                                           const std::string& cache_dir,
                                           const EnumerationCaps& caps = {});

} // namespace exthom

#endif
