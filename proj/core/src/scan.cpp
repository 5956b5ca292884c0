#include "exthom/scan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "exthom/canonical.hpp"
#include "exthom/formats.hpp"
#include "exthom/hom.hpp"
#include "exthom/observables.hpp"
#include "exthom/parallel.hpp"
#include "exthom/polynomials.hpp"
#include "exthom/standard.hpp"
#include "exthom/structure.hpp"

namespace exthom {

namespace {

struct Outcome {
    bool checked = false;
    std::vector<ScanViolation> violations;
    bool has_value = false;  // feeds argmin/argmax tracking
    BigCount value = 0;
    int v = 0;
    std::string g6, hex;
};

std::vector<Graph> family_graphs(const FamilySpec& family, const ScanParams& p) {
    return p.cache_dir.empty() ? enumerate_family(family, p.caps)
                               : enumerate_family_cached(family, p.cache_dir, p.caps);
}

int require_degree(const FamilySpec& family, const std::string& id) {
    if (!family.degree || *family.degree < 1)
        throw std::invalid_argument("scan " + id + ": needs a regular family with d >= 1");
    return *family.degree;
}

int require_q(const ScanParams& p, const std::string& id) {
    if (p.q < 2) throw std::invalid_argument("scan " + id + ": needs q >= 2");
    return p.q;
}

const LoopGraph& require_h(const ScanParams& p, const std::string& id) {
    if (!p.h) throw std::invalid_argument("scan " + id + ": needs a target H");
    return *p.h;
}

ScanViolation make_violation(const Graph& g, std::string detail, Comparison cmp) {
    const std::string form = canonical_form(g);
    return {to_graph6(g), form_to_hex(form), std::move(detail), std::move(cmp)};
}

Comparison integer_le(BigCount lhs, unsigned le, BigCount rhs, unsigned re) {
    Comparison cmp;
    cmp.relation = Relation::le;
    cmp.lhs = std::move(lhs);
    cmp.rhs = std::move(rhs);
    cmp.lhs_exp = le;
    cmp.rhs_exp = re;
    return cmp;
}

template <typename Fn>
ScanReport drive(std::string id, const FamilySpec& family, const ScanParams& p, Fn per_graph) {
    ScanReport report;
    report.conjecture_id = std::move(id);
    report.family = family_spec_key(family);
    const std::vector<Graph> graphs = family_graphs(family, p);
    const std::vector<Outcome> outcomes = parallel_map<Outcome>(graphs, p.workers, per_graph);
    for (const Outcome& o : outcomes) {
        if (!o.checked) {
            ++report.graphs_skipped;
            continue;
        }
        ++report.graphs_checked;
        for (const ScanViolation& viol : o.violations) report.violations.push_back(viol);
        if (o.has_value) {
            const auto better = [&](const std::optional<ExtremalWitness>& w, int want) {
                if (!w) return true;
                const int c = compare_normalized(o.value, static_cast<unsigned>(o.v), w->value,
                                                 static_cast<unsigned>(w->v));
                if (c != 0) return (c < 0) == (want < 0);
                return o.hex < w->graph_hex;  // deterministic tie-break
            };
            if (better(report.argmin, -1))
                report.argmin = ExtremalWitness{o.g6, o.hex, o.v, o.value};
            if (better(report.argmax, +1))
                report.argmax = ExtremalWitness{o.g6, o.hex, o.v, o.value};
        }
    }
    return report;
}

// --- individual scanners -------------------------------------------------

ScanReport scan_coloring_max(const FamilySpec& family, const ScanParams& p) {
    const int d = require_degree(family, "coloring_max");
    const int q = require_q(p, "coloring_max");
    const BigCount ref = coloring_count(complete_bipartite(d, d), q);
    return drive("coloring_max", family, p, [&, d, q](const Graph& g) {
        Outcome o;
        o.checked = true;
        Comparison cmp = integer_le(coloring_count(g, q), static_cast<unsigned>(g.n()), ref,
                                    static_cast<unsigned>(2 * d));
        if (verdict_of(cmp) == BoundVerdict::violated)
            o.violations.push_back(make_violation(g, "q=" + std::to_string(q), std::move(cmp)));
        return o;
    });
}

ScanReport scan_color_double_cover(const FamilySpec& family, const ScanParams& p) {
    const int q = require_q(p, "color_double_cover");
    return drive("color_double_cover", family, p, [q](const Graph& g) {
        Outcome o;
        o.checked = true;
        const BigCount lhs = coloring_count(g, q);
        const BigCount rhs = coloring_count(double_cover(g), q);
        Comparison cmp = integer_le(lhs * lhs, 1, rhs, 1);
        if (verdict_of(cmp) == BoundVerdict::violated)
            o.violations.push_back(make_violation(g, "q=" + std::to_string(q), std::move(cmp)));
        return o;
    });
}

ScanReport scan_potts_energy(const FamilySpec& family, const ScanParams& p) {
    const int d = require_degree(family, "potts_energy");
    const int q = require_q(p, "potts_energy");
    std::vector<Rational> grid = p.x_grid;
    if (grid.empty()) grid = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    for (const Rational& x : grid)
        if (x <= 0 || x > 1)
            throw std::invalid_argument("scan potts_energy: grid points must lie in (0,1]");
    const Graph kdd = complete_bipartite(d, d);
    std::vector<Rational> refs;
    refs.reserve(grid.size());
    for (const Rational& x : grid) refs.push_back(potts_internal_energy(kdd, q, x));
    ScanReport report = drive("potts_energy", family, p, [&, q](const Graph& g) {
        Outcome o;
        o.checked = true;
        const CountPolynomial z = potts_polynomial(g, q);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Rational num = 0, den = 0, xp = 1;
            for (std::size_t j = 0; j < z.coeffs.size(); ++j) {
                num += Rational(static_cast<long>(j)) * Rational(z.coeffs[j]) * xp;
                den += Rational(z.coeffs[j]) * xp;
                xp *= grid[i];
            }
            Comparison cmp;
            cmp.relation = Relation::ge;
            cmp.rational_mode = true;
            cmp.rlhs = num / (Rational(g.n()) * den);
            cmp.rrhs = refs[i];
            if (verdict_of(cmp) == BoundVerdict::violated)
                o.violations.push_back(make_violation(
                    g, "q=" + std::to_string(q) + ", x=" + rational_to_string(grid[i]), std::move(cmp)));
        }
        return o;
    });
    report.notes.push_back(
        "grid scan: violations refute the conjecture, a clean pass does not prove the "
        "all-temperatures statement");
    return report;
}

ScanReport scan_fixed_size(const std::string& id, PolyKind kind, const FamilySpec& family,
                           const ScanParams& p) {
    const int d = require_degree(family, id);
    const Graph kdd = complete_bipartite(d, d);
    const CountPolynomial base =
        kind == PolyKind::independence ? independence_polynomial(kdd) : matching_polynomial(kdd);
    // Reference polynomials for a copies of K_{d,d}, a = v/(2d).
    std::map<int, CountPolynomial> refs;
    for (int a = 1; 2 * d * a <= family.nmax; ++a) refs.emplace(a, poly_pow(base, a));
    ScanReport report = drive(id, family, p, [&](const Graph& g) {
        Outcome o;
        if (g.n() == 0 || g.n() % (2 * d) != 0) return o;  // v(G) = 2ad required
        o.checked = true;
        const CountPolynomial mine = kind == PolyKind::independence ? independence_polynomial(g)
                                                                    : matching_polynomial(g);
        const CountPolynomial& ref = refs.at(g.n() / (2 * d));
        const int top = std::max(degree(mine), degree(ref));
        for (int t = 0; t <= top; ++t) {
            Comparison cmp = integer_le(coefficient(mine, t), 1, coefficient(ref, t), 1);
            if (verdict_of(cmp) == BoundVerdict::violated)
                o.violations.push_back(make_violation(g, "t=" + std::to_string(t), std::move(cmp)));
        }
        return o;
    });
    report.notes.push_back("graphs with v(G) not a multiple of 2d are outside the statement");
    return report;
}

/// Common core of the two irregular local bounds: i(G) (resp. hom(G,H))
/// against the edge-wise product of K_{d_u,d_v} references, compared after
/// raising both sides to the lcm of the edge exponents.
template <typename RefFn>
Outcome irregular_outcome(const Graph& g, const BigCount& lhs_count, RefFn edge_ref,
                          const char* detail_head) {
    Outcome o;
    const GraphFacts facts = analyze(g);
    if (g.n() == 0 || facts.min_degree == 0) return o;  // isolated vertices excluded
    o.checked = true;
    long long m = 1;
    for (const auto& [u, v] : g.edges()) {
        const long long prod = static_cast<long long>(facts.degrees[static_cast<std::size_t>(u)]) *
                               facts.degrees[static_cast<std::size_t>(v)];
        m = std::lcm(m, prod);
    }
    BigCount rhs = 1;
    for (const auto& [u, v] : g.edges()) {
        const int du = facts.degrees[static_cast<std::size_t>(u)];
        const int dv = facts.degrees[static_cast<std::size_t>(v)];
        rhs *= big_pow(edge_ref(du, dv),
                       static_cast<unsigned long>(m / (static_cast<long long>(du) * dv)));
    }
    Comparison cmp = integer_le(big_pow(lhs_count, static_cast<unsigned long>(m)), 1,
                                std::move(rhs), 1);
    if (verdict_of(cmp) == BoundVerdict::violated)
        o.violations.push_back(
            make_violation(g, std::string(detail_head) + ", lcm=" + std::to_string(m), std::move(cmp)));
    return o;
}

ScanReport scan_kahn_irregular(const FamilySpec& family, const ScanParams& p) {
    ScanReport report = drive("kahn_irregular", family, p, [](const Graph& g) {
        return irregular_outcome(
            g, independent_set_count(g),
            [](int du, int dv) -> BigCount { return pow2(du) + pow2(dv) - 1; },
            "i(K_{du,dv}) product");
    });
    report.notes.push_back("graphs with isolated vertices are outside the statement");
    return report;
}

ScanReport scan_galvin_irregular(const FamilySpec& family, const ScanParams& p) {
    const LoopGraph h = require_h(p, "galvin_irregular");
    // hom(K_{a,b}, H) table up to the largest degree the family can produce.
    const int dmax = std::max(0, family.nmax - 1);
    std::vector<std::vector<BigCount>> table(static_cast<std::size_t>(dmax) + 1);
    for (int a = 1; a <= dmax; ++a) {
        table[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(dmax) + 1, 0);
        for (int b = 1; b <= dmax; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                hom_count(complete_bipartite(a, b), h);
    }
    ScanReport report = drive("galvin_irregular", family, p, [&](const Graph& g) {
        const GraphFacts facts = analyze(g);
        if (!facts.bipartition) return Outcome{};  // bipartite hypothesis
        return irregular_outcome(
            g, hom_count(g, h),
            [&](int du, int dv) {
                return table[static_cast<std::size_t>(du)][static_cast<std::size_t>(dv)];
            },
            "hom(K_{du,dv},H) product");
    });
    report.notes.push_back(
        "non-bipartite graphs and graphs with isolated vertices are outside the statement");
    return report;
}

ScanReport scan_triangle_free_max(const FamilySpec& family, const ScanParams& p) {
    const int d = require_degree(family, "triangle_free_max");
    const LoopGraph h = require_h(p, "triangle_free_max");
    const BigCount ref = hom_count(complete_bipartite(d, d), h);
    ScanReport report = drive("triangle_free_max", family, p, [&, d](const Graph& g) {
        Outcome o;
        if (!analyze(g).triangle_free) return o;
        o.checked = true;
        Comparison cmp = integer_le(hom_count(g, h), static_cast<unsigned>(g.n()), ref,
                                    static_cast<unsigned>(2 * d));
        if (verdict_of(cmp) == BoundVerdict::violated)
            o.violations.push_back(make_violation(g, "vs K_{d,d}", std::move(cmp)));
        return o;
    });
    report.notes.push_back("graphs with triangles are outside the statement");
    return report;
}

ScanReport scan_girth_extrema(const FamilySpec& family, const ScanParams& p) {
    ScanReport report = drive("girth_extrema", family, p, [](const Graph& g) {
        Outcome o;
        o.checked = true;
        o.has_value = true;
        o.value = independent_set_count(g);
        o.v = g.n();
        const std::string form = canonical_form(g);
        o.g6 = to_graph6(g);
        o.hex = form_to_hex(form);
        return o;
    });
    report.notes.push_back(
        "argmin/argmax of i(G)^{1/v(G)} relative to this family only; no general claim");
    return report;
}

ScanReport scan_fixture_planted(const FamilySpec& family, const ScanParams& p) {
    ScanReport report = drive("fixture_planted", family, p, [](const Graph& g) {
        Outcome o;
        o.checked = true;
        o.violations.push_back(
            make_violation(g, "planted violation (self-test)", integer_le(1, 1, 0, 1)));
        return o;
    });
    report.notes.push_back("scanner self-test: every graph is flagged by construction");
    return report;
}

} // namespace

const std::vector<std::string>& scan_catalog() {
    static const std::vector<std::string> ids = {
        "coloring_max",     "color_double_cover", "potts_energy",  "ind_fixed_size",
        "mat_fixed_size",   "kahn_irregular",     "galvin_irregular", "triangle_free_max",
        "girth_extrema",    "fixture_planted",
    };
    return ids;
}

ScanReport scan_conjecture(const std::string& conjecture_id, const FamilySpec& family,
                           const ScanParams& params) {
    if (conjecture_id == "coloring_max") return scan_coloring_max(family, params);
    if (conjecture_id == "color_double_cover") return scan_color_double_cover(family, params);
    if (conjecture_id == "potts_energy") return scan_potts_energy(family, params);
    if (conjecture_id == "ind_fixed_size")
        return scan_fixed_size("ind_fixed_size", PolyKind::independence, family, params);
    if (conjecture_id == "mat_fixed_size")
        return scan_fixed_size("mat_fixed_size", PolyKind::matching, family, params);
    if (conjecture_id == "kahn_irregular") return scan_kahn_irregular(family, params);
    if (conjecture_id == "galvin_irregular") return scan_galvin_irregular(family, params);
    if (conjecture_id == "triangle_free_max") return scan_triangle_free_max(family, params);
    if (conjecture_id == "girth_extrema") return scan_girth_extrema(family, params);
    if (conjecture_id == "fixture_planted") return scan_fixture_planted(family, params);
    throw std::invalid_argument("unknown conjecture id: " + conjecture_id);
}

ScanReport maximizer_profile(int d, const FamilySpec& family, const LoopGraph& h,
                             const ScanParams& params) {
    if (d < 1) throw std::invalid_argument("maximizer_profile: d must be at least 1");
    const bool grid = !params.k_grid.empty();
    if (grid) {
        if (h.loop_count() != 0 || h.n() != d)
            throw std::invalid_argument("maximizer_profile: k-grid mode needs H = K_d (loopless)");
        for (int u = 0; u < h.n(); ++u)
            for (int v = u + 1; v < h.n(); ++v)
                if (!h.edge(u, v))
                    throw std::invalid_argument("maximizer_profile: k-grid mode needs H complete");
        for (int k : params.k_grid)
            if (k < 1) throw std::invalid_argument("maximizer_profile: grid values must be positive");
    }

    ScanReport report;
    report.conjecture_id = "maximizer_profile";
    report.family = family_spec_key(family);
    const std::vector<Graph> graphs = family_graphs(family, params);

    struct Row {
        ProfileRow row;
        std::string form;
    };
    const std::vector<Row> rows = parallel_map<Row>(graphs, params.workers, [&](const Graph& g) {
        Row r;
        const GraphFacts facts = analyze(g);
        r.form = canonical_form(g);
        r.row.graph6 = to_graph6(g);
        r.row.graph_hex = form_to_hex(r.form);
        r.row.v = g.n();
        r.row.components = facts.components;
        if (grid) {
            for (int k : params.k_grid) r.row.values.push_back(hom_count_disjoint_cliques(g, k, d));
        } else {
            r.row.values.push_back(hom_count(g, h));
        }
        return r;
    });

    const Graph kdd = complete_bipartite(d, d);
    const Graph kd1 = complete(d + 1);
    const std::string form_kdd = canonical_form(kdd);
    const std::string form_kd1 = canonical_form(kd1);
    const std::size_t columns = grid ? params.k_grid.size() : 1;
    for (std::size_t j = 0; j < columns; ++j) {
        ProfileColumn col;
        if (grid) {
            const int k = params.k_grid[j];
            col.k = std::to_string(k);
            col.ref_kdd = hom_count_disjoint_cliques(kdd, k, d);
            col.ref_kd1 = hom_count_disjoint_cliques(kd1, k, d);
        } else {
            col.ref_kdd = hom_count(kdd, h);
            col.ref_kd1 = hom_count(kd1, h);
        }
        if (!rows.empty()) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const int c = compare_normalized(rows[i].row.values[j],
                                                 static_cast<unsigned>(rows[i].row.v),
                                                 rows[best].row.values[j],
                                                 static_cast<unsigned>(rows[best].row.v));
                if (c > 0 || (c == 0 && rows[i].row.graph_hex < rows[best].row.graph_hex)) best = i;
            }
            col.argmax_row = best;
            col.argmax_is_kdd = rows[best].form == form_kdd;
            col.argmax_is_kd1 = rows[best].form == form_kd1;
            col.cmp_vs_kdd =
                compare_normalized(rows[best].row.values[j], static_cast<unsigned>(rows[best].row.v),
                                   col.ref_kdd, static_cast<unsigned>(2 * d));
            col.cmp_vs_kd1 =
                compare_normalized(rows[best].row.values[j], static_cast<unsigned>(rows[best].row.v),
                                   col.ref_kd1, static_cast<unsigned>(d + 1));
        }
        report.profile.push_back(std::move(col));
    }
    report.graphs_checked = static_cast<long long>(rows.size());
    for (const Row& r : rows) report.table.push_back(r.row);
    report.notes.push_back(grid ? "profiled target is kK_d over the grid; references are "
                                  "hom(K_{d,d},kK_d) and hom(K_{d+1},kK_d)"
                                : "references are hom(K_{d,d},H) and hom(K_{d+1},H)");
    if (rows.empty()) report.notes.push_back("empty family");
    return report;
}

} // namespace exthom
