#include "exthom/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>

#include "exthom/canonical.hpp"
#include "exthom/formats.hpp"

namespace exthom {

namespace {

[[noreturn]] void spec_fail(const std::string& what) {
    throw std::invalid_argument("family spec: " + what);
}

int parse_spec_int(const std::string& token, const std::string& text) {
    if (text.empty()) spec_fail("token '" + token + "' needs a value");
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        spec_fail("token '" + token + "' has non-numeric value '" + text + "'");
    }
    if (pos != text.size()) spec_fail("token '" + token + "' has trailing characters in '" + text + "'");
    if (value < 0) spec_fail("token '" + token + "' must be nonnegative");
    return value;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

/// Generates connected d-regular graphs on n labeled vertices by repeatedly
/// completing the smallest deficient vertex. Unlabeled vertices form a
/// suffix; a completion may only touch a prefix of that suffix, which makes
/// every BFS-ordered labeling reachable exactly and keeps the search tree
/// small. Isomorphic duplicates are rejected via canonical forms.
class RegularGenerator {
public:
    RegularGenerator(int n, int d, const FamilySpec& flags)
        : n_(n), d_(d), flags_(flags) {
        girth_floor_ = flags.min_girth.value_or(0);
        if (flags.triangle_free) girth_floor_ = std::max(girth_floor_, 4);
        if (girth_floor_ >= 5) flags_c4_ = true;
        else flags_c4_ = flags.c4_free;
        adj_.fill(0);
        deg_.fill(0);
        color_.fill(0);
    }

    std::vector<Graph> run() {
        next_fresh_ = 1;
        complete();
        return std::move(reps_);
    }

private:
    void complete() {
        int u = -1;
        for (int i = 0; i < next_fresh_; ++i)
            if (deg_[static_cast<std::size_t>(i)] < d_) { u = i; break; }
        if (u < 0) {
            if (next_fresh_ == n_) emit();
            return;  // leftover fresh vertices would start a second component
        }
        const int r = d_ - deg_[static_cast<std::size_t>(u)];
        std::vector<int> cands;
        for (int v = u + 1; v < next_fresh_; ++v)
            if (deg_[static_cast<std::size_t>(v)] < d_ && !(adj_[static_cast<std::size_t>(u)] >> v & 1))
                cands.push_back(v);
        const int fresh_avail = n_ - next_fresh_;
        std::vector<int> chosen;
        for (int k = 0; k <= std::min(r, fresh_avail); ++k) {
            const int need = r - k;
            if (need > static_cast<int>(cands.size())) continue;
            choose_touched(u, k, need, 0, cands, chosen);
        }
    }

    void choose_touched(int u, int fresh, int need, std::size_t from,
                        const std::vector<int>& cands, std::vector<int>& chosen) {
        if (need == 0) {
            attach(u, chosen, fresh);
            return;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= cands.size(); ++i) {
            chosen.push_back(cands[i]);
            choose_touched(u, fresh, need - 1, i + 1, cands, chosen);
            chosen.pop_back();
        }
    }

    void attach(int u, const std::vector<int>& touched, int fresh) {
        std::vector<int> added;
        bool ok = true;
        for (int v : touched) {
            if (!edge_allowed(u, v)) { ok = false; break; }
            add_edge(u, v);
            added.push_back(v);
        }
        if (ok) {
            const int base = next_fresh_;
            for (int j = 0; j < fresh; ++j) {
                const int w = base + j;
                color_[static_cast<std::size_t>(w)] = color_[static_cast<std::size_t>(u)] ^ 1;
                add_edge(u, w);
                added.push_back(w);
            }
            next_fresh_ = base + fresh;
            complete();
            next_fresh_ = base;
        }
        for (auto it = added.rbegin(); it != added.rend(); ++it) remove_edge(u, *it);
    }

    bool edge_allowed(int u, int v) const {
        const auto au = adj_[static_cast<std::size_t>(u)];
        const auto av = adj_[static_cast<std::size_t>(v)];
        if (flags_.bipartite &&
            color_[static_cast<std::size_t>(u)] == color_[static_cast<std::size_t>(v)])
            return false;
        if (girth_floor_ >= 4 && (au & av) != 0) return false;  // common neighbor → C_3
        if (flags_c4_) {
            // A new C_4 through uv needs a path u–w–y–v of length three.
            uint64_t ws = au & ~bit(v);
            while (ws != 0) {
                const int w = std::countr_zero(ws);
                ws &= ws - 1;
                if ((adj_[static_cast<std::size_t>(w)] & av & ~bit(u)) != 0) return false;
            }
        }
        if (girth_floor_ >= 5) {
            const int dist = bfs_distance(u, v);
            if (dist >= 0 && dist + 1 < girth_floor_) return false;
        }
        return true;
    }

    int bfs_distance(int u, int v) const {
        uint64_t seen = bit(u);
        uint64_t frontier = bit(u);
        int dist = 0;
        while (frontier != 0) {
            if (frontier & bit(v)) return dist;
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f != 0) {
                const int w = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[static_cast<std::size_t>(w)];
            }
            frontier = next & ~seen;
            seen |= next;
            ++dist;
        }
        return -1;
    }

    void add_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
    }

    void remove_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)] &= ~bit(v);
        adj_[static_cast<std::size_t>(v)] &= ~bit(u);
        --deg_[static_cast<std::size_t>(u)];
        --deg_[static_cast<std::size_t>(v)];
    }

    void emit() {
        Graph g(n_);
        for (int u = 0; u < n_; ++u) {
            uint64_t rest = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
            while (rest != 0) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                g.add_edge(u, v);
            }
        }
        auto result = canonical_result(LoopGraph(g));
        if (!seen_.insert(result.form).second) return;
        std::vector<int> inverse(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            inverse[static_cast<std::size_t>(result.order[static_cast<std::size_t>(i)])] = i;
        Graph canon(n_);
        for (const auto& [a, b] : g.edges())
            canon.add_edge(inverse[static_cast<std::size_t>(a)], inverse[static_cast<std::size_t>(b)]);
        reps_.push_back(std::move(canon));
    }

    int n_;
    int d_;
    FamilySpec flags_;
    int girth_floor_ = 0;
    bool flags_c4_ = false;
    std::array<uint64_t, kMaxVertices> adj_{};
    std::array<int, kMaxVertices> deg_{};
    std::array<int, kMaxVertices> color_{};
    int next_fresh_ = 1;
    std::set<std::string> seen_;
    std::vector<Graph> reps_;
};

bool passes_flags(const Graph& g, const FamilySpec& spec) {
    const GraphFacts facts = analyze(g);
    if (spec.connected && !facts.connected()) return false;
    if (spec.bipartite && !facts.bipartition) return false;
    if (spec.triangle_free && !facts.triangle_free) return false;
    if (spec.c4_free && !facts.c4_free) return false;
    if (spec.min_girth && facts.girth && *facts.girth < *spec.min_girth) return false;
    if (spec.degree && facts.regular_degree != spec.degree && g.n() > 0) return false;
    return true;
}

/// Partitions of n into parts from `usable_sizes` (descending), assembling
/// disjoint unions of connected representatives; the decomposition into
/// connected components is unique, so no isomorph rejection is needed.
void assemble_partitions(int remaining, int max_part,
                         const std::vector<std::vector<Graph>>& conn_by_size,
                         std::vector<const Graph*>& parts,
                         std::vector<Graph>& out) {
    if (remaining == 0) {
        std::vector<Graph> comps;
        comps.reserve(parts.size());
        for (const Graph* p : parts) comps.push_back(*p);
        // Relabel canonically so unions obey the same postcondition as the
        // connected generators: every emitted graph is its class representative.
        out.push_back(canonical_graph(disjoint_union(comps)));
        return;
    }
    for (int s = std::min(remaining, max_part); s >= 1; --s) {
        const auto& reps = conn_by_size[static_cast<std::size_t>(s)];
        if (reps.empty()) continue;
        // Choose how many parts of size s and which representatives, as a
        // multiset combination in nondecreasing index order.
        struct Chooser {
            static void go(int remaining, int s, std::size_t from,
                           const std::vector<Graph>& reps,
                           const std::vector<std::vector<Graph>>& conn_by_size,
                           std::vector<const Graph*>& parts, std::vector<Graph>& out) {
                // Stop taking parts of size s; recurse to strictly smaller sizes.
                assemble_partitions(remaining, s - 1, conn_by_size, parts, out);
                if (remaining < s) return;
                for (std::size_t i = from; i < reps.size(); ++i) {
                    parts.push_back(&reps[i]);
                    go(remaining - s, s, i, reps, conn_by_size, parts, out);
                    parts.pop_back();
                }
            }
        };
        Chooser::go(remaining, s, 0, reps, conn_by_size, parts, out);
        return;  // sizes below s are handled inside the recursion
    }
}

int cap_for(const FamilySpec& spec, const EnumerationCaps& caps) {
    if (spec.all_graphs_mode) return caps.all_graphs;
    const int d = *spec.degree;
    if (d <= 2) return caps.low_degree;
    if (d == 3) return caps.cubic;
    if (d == 4) return caps.quartic;
    return caps.high_degree;
}

} // namespace

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    bool saw_n = false, saw_nmin = false, saw_nmax = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string token = trim(text.substr(start, comma - start));
        start = comma + 1;
        if (token.empty()) {
            if (start > text.size()) break;
            spec_fail("empty token");
        }
        const std::size_t eq = token.find('=');
        const std::string key = eq == std::string::npos ? token : trim(token.substr(0, eq));
        const std::string value = eq == std::string::npos ? "" : trim(token.substr(eq + 1));
        if (key == "d") {
            spec.degree = parse_spec_int(key, value);
        } else if (key == "n") {
            spec.nmin = spec.nmax = parse_spec_int(key, value);
            saw_n = true;
        } else if (key == "nmin") {
            spec.nmin = parse_spec_int(key, value);
            saw_nmin = true;
        } else if (key == "nmax") {
            spec.nmax = parse_spec_int(key, value);
            saw_nmax = true;
        } else if (key == "girth") {
            spec.min_girth = parse_spec_int(key, value);
            if (*spec.min_girth < 3) spec_fail("girth must be at least 3");
        } else if (key == "connected" && eq == std::string::npos) {
            spec.connected = true;
        } else if (key == "bipartite" && eq == std::string::npos) {
            spec.bipartite = true;
        } else if (key == "trianglefree" && eq == std::string::npos) {
            spec.triangle_free = true;
        } else if (key == "c4free" && eq == std::string::npos) {
            spec.c4_free = true;
        } else if (key == "all" && eq == std::string::npos) {
            spec.all_graphs_mode = true;
        } else {
            spec_fail("unknown token '" + token + "'");
        }
    }
    if (saw_n && (saw_nmin || saw_nmax)) spec_fail("n conflicts with nmin/nmax");
    if (spec.all_graphs_mode && spec.degree) spec_fail("'all' conflicts with 'd'");
    if (!spec.all_graphs_mode && !spec.degree) spec_fail("need 'd=K' or 'all'");
    if (spec.nmax < 0) spec_fail("need 'n=K' or 'nmax=K'");
    if (spec.nmin > spec.nmax) spec_fail("nmin exceeds nmax");
    return spec;
}

std::string family_spec_key(const FamilySpec& spec) {
    std::string key = spec.all_graphs_mode ? "all" : "d" + std::to_string(*spec.degree);
    key += "_n" + std::to_string(spec.nmin) + "-" + std::to_string(spec.nmax);
    if (spec.connected) key += "_connected";
    if (spec.bipartite) key += "_bipartite";
    if (spec.triangle_free) key += "_trianglefree";
    if (spec.c4_free) key += "_c4free";
    if (spec.min_girth) key += "_girth" + std::to_string(*spec.min_girth);
    return key;
}

std::vector<Graph> connected_regular_graphs(int n, int d, const FamilySpec& flags) {
    if (n < 0 || d < 0) throw std::invalid_argument("regular family: negative parameters");
    if (n == 0) return {};
    if (d == 0) return n == 1 ? std::vector<Graph>{Graph(1)} : std::vector<Graph>{};
    if (n < d + 1 || (n * d) % 2 != 0) return {};
    if (n > kMaxVertices) throw std::invalid_argument("regular family: n exceeds 64");
    RegularGenerator gen(n, d, flags);
    std::vector<Graph> reps = gen.run();
    std::vector<Graph> filtered;
    for (Graph& g : reps) {
        FamilySpec check = flags;
        check.degree = d;
        check.connected = true;
        if (passes_flags(g, check)) filtered.push_back(std::move(g));
    }
    return filtered;
}

std::vector<Graph> all_graphs(int n, const EnumerationCaps& caps) {
    if (n < 0) throw std::invalid_argument("all_graphs: negative order");
    if (n > caps.all_graphs)
        throw std::invalid_argument("all_graphs: n=" + std::to_string(n) + " exceeds cap " +
                                    std::to_string(caps.all_graphs));
    std::vector<Graph> level{Graph(0)};
    for (int k = 0; k < n; ++k) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& g : level) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
                Graph h(k + 1);
                for (const auto& [a, b] : g.edges()) h.add_edge(a, b);
                uint64_t m = mask;
                while (m != 0) {
                    const int v = std::countr_zero(m);
                    m &= m - 1;
                    h.add_edge(v, k);
                }
                const Graph canon = canonical_graph(h);
                if (seen.insert(canonical_form(canon)).second) next.push_back(canon);
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> enumerate_family(const FamilySpec& spec, const EnumerationCaps& caps) {
    if (spec.all_graphs_mode == spec.degree.has_value())
        throw std::invalid_argument("family spec: need exactly one of degree or all-graphs mode");
    if (spec.nmax < 0) throw std::invalid_argument("family spec: upper bound on n required");
    if (spec.min_girth && *spec.min_girth < 3)
        throw std::invalid_argument("family spec: girth must be at least 3");
    const int cap = cap_for(spec, caps);
    if (spec.nmax > cap)
        throw std::invalid_argument("family spec: nmax=" + std::to_string(spec.nmax) +
                                    " exceeds cap " + std::to_string(cap) + " for this family");

    std::vector<Graph> out;
    if (spec.all_graphs_mode) {
        for (int n = std::max(spec.nmin, 0); n <= spec.nmax; ++n) {
            for (Graph& g : all_graphs(n, caps))
                if (passes_flags(g, spec)) out.push_back(std::move(g));
        }
        return out;
    }

    const int d = *spec.degree;
    const int lowest = d == 0 ? 1 : d + 1;
    const int nmin = std::max(spec.nmin, lowest);
    if (spec.nmin == spec.nmax) {
        const int n = spec.nmax;
        if (n < lowest || (static_cast<long long>(n) * d) % 2 != 0)
            throw std::invalid_argument("family spec: no " + std::to_string(d) +
                                        "-regular graphs on " + std::to_string(n) + " vertices");
    }

    if (spec.connected) {
        for (int n = nmin; n <= spec.nmax; ++n) {
            auto reps = connected_regular_graphs(n, d, spec);
            out.insert(out.end(), std::make_move_iterator(reps.begin()),
                       std::make_move_iterator(reps.end()));
        }
        return out;
    }

    // Disconnected graphs are unions of connected ones; the component
    // decomposition is unique, so partitions give each class exactly once.
    std::vector<std::vector<Graph>> conn_by_size(static_cast<std::size_t>(spec.nmax) + 1);
    for (int s = lowest; s <= spec.nmax; ++s)
        conn_by_size[static_cast<std::size_t>(s)] = connected_regular_graphs(s, d, spec);
    for (int n = std::max(spec.nmin, lowest); n <= spec.nmax; ++n) {
        std::vector<const Graph*> parts;
        assemble_partitions(n, n, conn_by_size, parts, out);
    }
    return out;
}

std::vector<Graph> enumerate_family_cached(const FamilySpec& spec, const std::string& cache_dir,
                                           const EnumerationCaps& caps) {
    namespace fs = std::filesystem;
    const fs::path path = fs::path(cache_dir) / (family_spec_key(spec) + ".g6");
    if (fs::exists(path)) {
        std::vector<Graph> cached = read_graph6_file(path.string());
        return cached;
    }
    std::vector<Graph> graphs = enumerate_family(spec, caps);
    fs::create_directories(fs::path(cache_dir));
    write_graph6_file(path.string(), graphs);
    return graphs;
}

} // namespace exthom
