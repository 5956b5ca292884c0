#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "exthom/bounds.hpp"
#include "exthom/canonical.hpp"
#include "exthom/enumerate.hpp"
#include "exthom/formats.hpp"
#include "exthom/hom.hpp"
#include "exthom/observables.hpp"
#include "exthom/parallel.hpp"
#include "exthom/polynomials.hpp"
#include "exthom/report_io.hpp"
#include "exthom/scan.hpp"
#include "exthom/standard.hpp"

namespace exthom {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_file_source(const std::string& s) {
    return ends_with(s, ".g6") || ends_with(s, ".graph6") || ends_with(s, ".lg");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A graph source: named generator spec, graph6 file (possibly many
/// graphs), or .lg loop-graph file.
std::vector<std::pair<std::string, LoopGraph>> load_graphs(const std::string& src) {
    std::vector<std::pair<std::string, LoopGraph>> out;
    if (ends_with(src, ".lg")) {
        out.emplace_back(src, from_lg(slurp(src)));
    } else if (ends_with(src, ".g6") || ends_with(src, ".graph6")) {
        for (const Graph& g : read_graph6_file(src)) out.emplace_back(to_graph6(g), LoopGraph(g));
    } else {
        out.emplace_back(src, parse_graph_spec(src));
    }
    return out;
}

LoopGraph load_one(const std::string& src, const std::string& what) {
    auto graphs = load_graphs(src);
    if (graphs.size() != 1)
        throw std::invalid_argument(what + ": expected exactly one graph, got " +
                                    std::to_string(graphs.size()) + " from " + src);
    return std::move(graphs[0].second);
}

Graph require_simple(const LoopGraph& g, const std::string& what) {
    if (g.loop_count() != 0) throw std::invalid_argument(what + " must be loop-free");
    return g.simple();
}

/// Display-only decimal approximation of value^(1/e); never used in a
/// verdict.
std::string approx_root(const BigCount& value, unsigned e) {
    if (e == 0) return "?";
    if (value == 0) return "0";
    signed long int exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    const double root = std::pow(mant, 1.0 / e) *
                        std::pow(2.0, static_cast<double>(exp2) / static_cast<double>(e));
    std::ostringstream ss;
    ss << std::setprecision(6) << root;
    return ss.str();
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        if (item.empty()) throw std::invalid_argument(what + ": empty entry");
        out.push_back(rational_from_string(item));
        start = comma + 1;
        if (start > text.size()) break;
    }
    if (out.empty()) throw std::invalid_argument(what + ": empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    for (const Rational& r : parse_rational_list(text, what)) {
        if (r.get_den() != 1 || r < 0)
            throw std::invalid_argument(what + ": entries must be nonnegative integers");
        out.push_back(static_cast<int>(r.get_num().get_si()));
    }
    return out;
}

void write_payload(const std::string& payload, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot write file: " + out_file);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
}

struct CommonOptions {
    std::string output = "human";  // human|json|csv
    std::string out_file;
    std::string cache_dir;
    int workers = 1;
};

void attach_common(CLI::App* cmd, CommonOptions& opts, bool with_workers = true) {
    cmd->add_option("--output", opts.output, "Output mode: human, json, or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--out", opts.out_file, "Write the report to this file instead of stdout");
    cmd->add_option("--cache-dir", opts.cache_dir, "Graph6 enumeration cache directory");
    if (with_workers)
        cmd->add_option("--workers", opts.workers, "Worker threads for family fan-out")
            ->check(CLI::PositiveNumber);
}

std::string human_bound_line(const BoundReport& r) {
    std::ostringstream ss;
    ss << r.bound_id << "  graph=" << r.graph_id.substr(0, 16)
       << (r.graph_id.size() > 16 ? "…" : "") << "  [" << r.params_text << "]  "
       << verdict_name(r.verdict) << "  ";
    const char* rel = r.cmp.relation == Relation::le ? "<=" : ">=";
    if (r.cmp.rational_mode) {
        ss << rational_to_string(r.cmp.rlhs) << ' ' << rel << ' ' << rational_to_string(r.cmp.rrhs);
    } else {
        ss << r.cmp.lhs.get_str() << "^(1/" << r.cmp.lhs_exp << ") " << rel << ' '
           << r.cmp.rhs.get_str() << "^(1/" << r.cmp.rhs_exp << ")"
           << "  (approx " << approx_root(r.cmp.lhs, r.cmp.lhs_exp) << " vs "
           << approx_root(r.cmp.rhs, r.cmp.rhs_exp) << ")";
    }
    return ss.str();
}

std::string human_scan_report(const ScanReport& r) {
    std::ostringstream ss;
    ss << "conjecture: " << r.conjecture_id << "\nfamily: " << r.family
       << "\ngraphs checked: " << r.graphs_checked << "  skipped: " << r.graphs_skipped
       << "\nviolations: " << r.violations.size() << '\n';
    for (const ScanViolation& v : r.violations) {
        ss << "  VIOLATION " << v.graph6 << "  (" << v.detail << ")  ";
        if (v.cmp.rational_mode)
            ss << rational_to_string(v.cmp.rlhs)
               << (v.cmp.relation == Relation::le ? " <= " : " >= ")
               << rational_to_string(v.cmp.rrhs);
        else
            ss << v.cmp.lhs.get_str() << "^(1/" << v.cmp.lhs_exp << ")"
               << (v.cmp.relation == Relation::le ? " <= " : " >= ") << v.cmp.rhs.get_str()
               << "^(1/" << v.cmp.rhs_exp << ")";
        ss << "  FAILS\n";
    }
    if (r.argmin)
        ss << "argmin: " << r.argmin->graph6 << "  value=" << r.argmin->value.get_str()
           << "  v=" << r.argmin->v << "  (approx " << approx_root(r.argmin->value,
                                                                   static_cast<unsigned>(r.argmin->v))
           << ")\n";
    if (r.argmax)
        ss << "argmax: " << r.argmax->graph6 << "  value=" << r.argmax->value.get_str()
           << "  v=" << r.argmax->v << "  (approx " << approx_root(r.argmax->value,
                                                                   static_cast<unsigned>(r.argmax->v))
           << ")\n";
    for (std::size_t j = 0; j < r.profile.size(); ++j) {
        const ProfileColumn& col = r.profile[j];
        ss << "grid";
        if (!col.k.empty()) ss << " k=" << col.k;
        if (col.argmax_row < r.table.size()) {
            const ProfileRow& row = r.table[col.argmax_row];
            ss << ": argmax " << row.graph6 << " (v=" << row.v
               << ", value=" << row.values[j].get_str() << ")";
        }
        ss << "  is_Kdd=" << (col.argmax_is_kdd ? "yes" : "no")
           << " is_Kd1=" << (col.argmax_is_kd1 ? "yes" : "no")
           << " vs_Kdd=" << (col.cmp_vs_kdd > 0 ? ">" : col.cmp_vs_kdd < 0 ? "<" : "=")
           << " vs_Kd1=" << (col.cmp_vs_kd1 > 0 ? ">" : col.cmp_vs_kd1 < 0 ? "<" : "=") << '\n';
    }
    for (const std::string& note : r.notes) ss << "note: " << note << '\n';
    return ss.str();
}

struct CliError {
    int code;
    std::string message;
};

int emit_scan_report(const ScanReport& report, const CommonOptions& opts, std::ostream& out) {
    std::string payload;
    if (opts.output == "json") payload = to_json(report);
    else if (opts.output == "csv") payload = to_csv(report);
    else payload = human_scan_report(report);
    write_payload(payload, opts.out_file, out);
    return report.held() ? 0 : 1;
}

// --- subcommand implementations ------------------------------------------

int cmd_count(const std::vector<std::string>& pos, const std::string& file, std::ostream& out) {
    std::string g_src, h_src;
    if (!file.empty()) {
        if (pos.size() != 1)
            throw std::invalid_argument("count: with --file, give exactly one target H");
        g_src = file;
        h_src = pos[0];
    } else {
        if (pos.size() != 2) throw std::invalid_argument("count: usage is `count G H`");
        g_src = pos[0];
        h_src = pos[1];
    }
    const LoopGraph h = load_one(h_src, "target H");
    for (const auto& [label, lg] : load_graphs(g_src)) {
        const Graph g = require_simple(lg, "source graph G (" + label + ")");
        out << hom_count(g, h).get_str() << '\n';
    }
    return 0;
}

int cmd_poly(const std::string& g_src, const std::string& kind, int q, const CommonOptions& opts,
             std::ostream& out) {
    const Graph g = require_simple(load_one(g_src, "graph G"), "graph G");
    CountPolynomial p{PolyKind::independence, {}};
    if (kind == "ind") p = independence_polynomial(g);
    else if (kind == "match") p = matching_polynomial(g);
    else if (kind == "potts") {
        if (q < 2) throw std::invalid_argument("poly: potts needs --q >= 2");
        p = potts_polynomial(g, q);
    } else {
        throw std::invalid_argument("poly: unknown kind " + kind);
    }
    if (opts.output == "json") {
        write_payload(to_json(p), opts.out_file, out);
    } else {
        std::ostringstream ss;
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            ss << (i ? " " : "") << p.coeffs[i].get_str();
        write_payload(ss.str(), opts.out_file, out);
    }
    return 0;
}

int cmd_occupancy(const std::string& g_src, const std::string& lambda_text, bool distribution,
                  const CommonOptions& opts, std::ostream& out) {
    const Graph g = require_simple(load_one(g_src, "graph G"), "graph G");
    const Rational lambda = rational_from_string(lambda_text);
    const Rational alpha = occupancy_fraction(g, lambda);
    if (opts.output == "json") {
        nlohmann::ordered_json j;
        j["lambda"] = rational_to_string(lambda);
        j["alpha"] = rational_to_string(alpha);
        if (distribution) {
            nlohmann::ordered_json dist = nlohmann::ordered_json::array();
            for (const Rational& p : neighbor_occupancy_distribution(g, lambda))
                dist.push_back(rational_to_string(p));
            j["neighbor_distribution"] = std::move(dist);
        }
        write_payload(j.dump(2), opts.out_file, out);
    } else {
        std::ostringstream ss;
        ss << "alpha = " << rational_to_string(alpha) << '\n';
        if (distribution) {
            const auto dist = neighbor_occupancy_distribution(g, lambda);
            for (std::size_t k = 0; k < dist.size(); ++k)
                ss << "p_" << k << " = " << rational_to_string(dist[k]) << '\n';
        }
        write_payload(ss.str(), opts.out_file, out);
    }
    return 0;
}

int cmd_verify(const std::string& bound, const std::string& family_text,
               const std::string& graph_src, const std::string& target,
               const std::string& a_src, const std::string& b_src, int q, int t, int delta,
               const std::string& lambda_text, const CommonOptions& opts,
               const EnumerationCaps& caps, std::ostream& out) {
    if (std::find(bound_catalog().begin(), bound_catalog().end(), bound) == bound_catalog().end())
        throw std::invalid_argument("verify: unknown bound id " + bound +
                                    " (see README for the catalog)");
    if (family_text.empty() == graph_src.empty())
        throw std::invalid_argument("verify: give exactly one of --family or --graph");

    BoundParams params;
    if (!target.empty()) params.h = load_one(target, "target H");
    if (!a_src.empty()) {
        const LoopGraph a = load_one(a_src, "graph A");
        if (bound == "bigraph_target_max")
            params.bigraph_a = as_bigraph(require_simple(a, "graph A"));
        else
            params.power_base = a;
    }
    if (!b_src.empty()) {
        const Graph b = require_simple(load_one(b_src, "graph B"), "graph B");
        if (bound == "bigraph_target_max") params.bigraph_b = as_bigraph(b);
        else params.power_exponent = b;
    }
    if (q >= 0) params.q = q;
    if (t >= 0) params.t = t;
    if (delta >= 0) params.delta = delta;
    if (!lambda_text.empty()) params.lambda = rational_from_string(lambda_text);

    std::vector<Graph> graphs;
    if (!family_text.empty()) {
        const FamilySpec spec = parse_family_spec(family_text);
        graphs = opts.cache_dir.empty() ? enumerate_family(spec, caps)
                                        : enumerate_family_cached(spec, opts.cache_dir, caps);
    } else {
        for (const auto& [label, lg] : load_graphs(graph_src))
            graphs.push_back(require_simple(lg, "graph (" + label + ")"));
    }

    const std::vector<BoundReport> reports =
        parallel_map<BoundReport>(graphs, opts.workers, [&](const Graph& g) {
            return check_bound(g, bound, params);
        });

    long long holds = 0, tight = 0, violated = 0;
    for (const BoundReport& r : reports) {
        if (r.verdict == BoundVerdict::holds) ++holds;
        else if (r.verdict == BoundVerdict::tight) ++tight;
        else ++violated;
    }

    std::string payload;
    if (opts.output == "json") {
        payload = to_json(reports);
    } else if (opts.output == "csv") {
        payload = to_csv(reports);
    } else {
        std::ostringstream ss;
        for (const BoundReport& r : reports) ss << human_bound_line(r) << '\n';
        ss << "checked " << reports.size() << " graph(s): " << holds << " hold, " << tight
           << " tight, " << violated << " violated\n";
        payload = ss.str();
    }
    write_payload(payload, opts.out_file, out);
    return violated > 0 ? 1 : 0;
}

int cmd_enumerate(const std::string& family_text, const std::string& out_file, bool count_only,
                  const std::string& cache_dir, const EnumerationCaps& caps, std::ostream& out) {
    const FamilySpec spec = parse_family_spec(family_text);
    const std::vector<Graph> graphs = cache_dir.empty()
                                          ? enumerate_family(spec, caps)
                                          : enumerate_family_cached(spec, cache_dir, caps);
    if (count_only) {
        write_payload(std::to_string(graphs.size()), out_file, out);
        return 0;
    }
    std::ostringstream ss;
    write_graph6_lines(ss, graphs);
    write_payload(ss.str(), out_file, out);
    return 0;
}

int cmd_scan(const std::string& conjecture, const std::string& family_text,
             const std::string& target, int q, const std::string& x_grid_text,
             const CommonOptions& opts, const EnumerationCaps& caps, std::ostream& out) {
    const FamilySpec spec = parse_family_spec(family_text);
    ScanParams params;
    params.q = q < 0 ? 0 : q;
    params.workers = opts.workers;
    params.cache_dir = opts.cache_dir;
    params.caps = caps;
    if (!target.empty()) params.h = load_one(target, "target H");
    if (!x_grid_text.empty()) params.x_grid = parse_rational_list(x_grid_text, "--x-grid");
    const ScanReport report = scan_conjecture(conjecture, spec, params);
    return emit_scan_report(report, opts, out);
}

int cmd_profile(int d, const std::string& family_text, const std::string& target,
                const std::string& k_grid_text, const CommonOptions& opts,
                const EnumerationCaps& caps, std::ostream& out) {
    const FamilySpec spec = parse_family_spec(family_text);
    ScanParams params;
    params.workers = opts.workers;
    params.cache_dir = opts.cache_dir;
    params.caps = caps;
    if (!k_grid_text.empty()) params.k_grid = parse_int_list(k_grid_text, "--k-grid");
    const LoopGraph h = load_one(target, "target H");
    const ScanReport report = maximizer_profile(d, spec, h, params);
    emit_scan_report(report, opts, out);
    return 0;  // a profile reports a landscape; it has no violation state
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exthom: exact extremal counting of independent sets, colorings, "
                 "matchings, and graph homomorphisms"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional key=value config file; flags win on conflict");

    EnumerationCaps caps;
    app.add_option("--cap-cubic", caps.cubic, "Enumeration cap for d=3 families")->capture_default_str();
    app.add_option("--cap-quartic", caps.quartic, "Enumeration cap for d=4 families")->capture_default_str();
    app.add_option("--cap-all", caps.all_graphs, "Enumeration cap for all-graphs families")->capture_default_str();
    app.add_option("--cap-low", caps.low_degree, "Enumeration cap for d<=2 families")->capture_default_str();
    app.add_option("--cap-high", caps.high_degree, "Enumeration cap for d>=5 families")->capture_default_str();

    // count
    auto* count = app.add_subcommand("count", "Exact hom(G,H) as a decimal string");
    std::vector<std::string> count_pos;
    std::string count_file;
    count->add_option("graphs", count_pos, "G and H as named specs or files (H last)");
    count->add_option("--file", count_file, "Read G (one or many) from a .g6/.lg file");

    // poly
    auto* poly = app.add_subcommand("poly", "Independence / matching / Potts polynomial");
    std::string poly_g, poly_kind = "ind";
    int poly_q = -1;
    CommonOptions poly_opts;
    poly->add_option("graph", poly_g, "Graph G (named spec or file)")->required();
    poly->add_option("--kind", poly_kind, "ind, match, or potts")
        ->check(CLI::IsMember({"ind", "match", "potts"}));
    poly->add_option("--q", poly_q, "Potts state count");
    attach_common(poly, poly_opts, false);

    // occupancy
    auto* occ = app.add_subcommand("occupancy", "Hard-core occupancy fraction at a rational fugacity");
    std::string occ_g, occ_lambda;
    bool occ_dist = false;
    CommonOptions occ_opts;
    occ->add_option("graph", occ_g, "Graph G (named spec or file)")->required();
    occ->add_option("--lambda", occ_lambda, "Fugacity as a rational, e.g. 1 or 3/2")->required();
    occ->add_flag("--distribution", occ_dist, "Also print the neighbor occupancy distribution");
    attach_common(occ, occ_opts, false);

    // verify
    auto* verify = app.add_subcommand("verify", "Check a bound from the catalog on a graph or family");
    std::string v_bound, v_family, v_graph, v_target, v_a, v_b, v_lambda;
    int v_q = -1, v_t = -1, v_delta = -1;
    CommonOptions v_opts;
    verify->add_option("--bound", v_bound, "Bound id from the catalog")->required();
    verify->add_option("--family", v_family, "Family spec, e.g. d=3,connected,nmax=12");
    verify->add_option("--graph", v_graph, "Single graph source (named spec or file)");
    verify->add_option("--target", v_target, "Target H (named spec or .lg file)");
    verify->add_option("--A", v_a, "Graph A (loop-power base or bigraph A)");
    verify->add_option("--B", v_b, "Graph B (loop-power exponent or bigraph B)");
    verify->add_option("--q", v_q, "Color count");
    verify->add_option("--t", v_t, "Size parameter");
    verify->add_option("--delta", v_delta, "Minimum degree parameter");
    verify->add_option("--lambda", v_lambda, "Fugacity as a rational");
    attach_common(verify, v_opts);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Emit a family as graph6 lines");
    std::string e_family, e_out, e_cache;
    bool e_count_only = false;
    enumerate->add_option("--family", e_family, "Family spec")->required();
    enumerate->add_option("--out", e_out, "Write graph6 lines to this file");
    enumerate->add_flag("--count-only", e_count_only, "Print only the number of graphs");
    enumerate->add_option("--cache-dir", e_cache, "Graph6 enumeration cache directory");

    // scan
    auto* scan = app.add_subcommand("scan", "Scan a conjecture over a family");
    std::string s_conj, s_family, s_target, s_xgrid;
    int s_q = -1;
    CommonOptions s_opts;
    scan->add_option("--conjecture", s_conj, "Conjecture id from the scan catalog")->required();
    scan->add_option("--family", s_family, "Family spec")->required();
    scan->add_option("--target", s_target, "Target H for scanners that take one");
    scan->add_option("--q", s_q, "Color / Potts state count");
    scan->add_option("--x-grid", s_xgrid, "Potts grid, e.g. 1/4,1/2,3/4");
    attach_common(scan, s_opts);

    // profile
    auto* profile = app.add_subcommand("profile", "Rank hom(G,H)^{1/v} over a family");
    std::string p_family, p_target, p_kgrid;
    int p_d = 0;
    CommonOptions p_opts;
    profile->add_option("--d", p_d, "Degree of the profiled family")->required();
    profile->add_option("--family", p_family, "Family spec")->required();
    profile->add_option("--target", p_target, "Target H (K:d for k-grid mode)")->required();
    profile->add_option("--k-grid", p_kgrid, "Profile kK_d for these k, e.g. 1,10,100");
    attach_common(profile, p_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(count_pos, count_file, out);
        if (poly->parsed()) return cmd_poly(poly_g, poly_kind, poly_q, poly_opts, out);
        if (occ->parsed()) return cmd_occupancy(occ_g, occ_lambda, occ_dist, occ_opts, out);
        if (verify->parsed())
            return cmd_verify(v_bound, v_family, v_graph, v_target, v_a, v_b, v_q, v_t, v_delta,
                              v_lambda, v_opts, caps, out);
        if (enumerate->parsed())
            return cmd_enumerate(e_family, e_out, e_count_only, e_cache, caps, out);
        if (scan->parsed())
            return cmd_scan(s_conj, s_family, s_target, s_q, s_xgrid, s_opts, caps, out);
        if (profile->parsed())
            return cmd_profile(p_d, p_family, p_target, p_kgrid, p_opts, caps, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace exthom
