#include "exthom/report_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace exthom {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string count_str(const BigCount& c) { return c.get_str(); }

BigCount count_from(const std::string& s) {
    try {
        return BigCount(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad count literal: " + s);
    }
}

ordered_json comparison_json(const Comparison& c) {
    ordered_json j;
    j["relation"] = c.relation == Relation::le ? "le" : "ge";
    j["mode"] = c.rational_mode ? "rational" : "integer";
    if (c.rational_mode) {
        j["lhs"] = rational_to_string(c.rlhs);
        j["rhs"] = rational_to_string(c.rrhs);
    } else {
        j["lhs"] = count_str(c.lhs);
        j["rhs"] = count_str(c.rhs);
    }
    j["lhs_exp"] = c.lhs_exp;
    j["rhs_exp"] = c.rhs_exp;
    return j;
}

Comparison comparison_from(const ordered_json& j) {
    Comparison c;
    const std::string rel = j.at("relation").get<std::string>();
    if (rel == "le") c.relation = Relation::le;
    else if (rel == "ge") c.relation = Relation::ge;
    else throw std::invalid_argument("bad relation: " + rel);
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "rational") {
        c.rational_mode = true;
        c.rlhs = rational_from_string(j.at("lhs").get<std::string>());
        c.rrhs = rational_from_string(j.at("rhs").get<std::string>());
    } else if (mode == "integer") {
        c.lhs = count_from(j.at("lhs").get<std::string>());
        c.rhs = count_from(j.at("rhs").get<std::string>());
    } else {
        throw std::invalid_argument("bad comparison mode: " + mode);
    }
    c.lhs_exp = j.at("lhs_exp").get<unsigned>();
    c.rhs_exp = j.at("rhs_exp").get<unsigned>();
    return c;
}

ordered_json bound_report_json(const BoundReport& r) {
    ordered_json j;
    j["bound_id"] = r.bound_id;
    j["graph_id"] = r.graph_id;
    j["params"] = r.params_text;
    j["comparison"] = comparison_json(r.cmp);
    j["verdict"] = verdict_name(r.verdict);
    return j;
}

BoundReport bound_report_from(const ordered_json& j) {
    BoundReport r;
    r.bound_id = j.at("bound_id").get<std::string>();
    r.graph_id = j.at("graph_id").get<std::string>();
    r.params_text = j.at("params").get<std::string>();
    r.cmp = comparison_from(j.at("comparison"));
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "holds") r.verdict = BoundVerdict::holds;
    else if (v == "tight") r.verdict = BoundVerdict::tight;
    else if (v == "violated") r.verdict = BoundVerdict::violated;
    else throw std::invalid_argument("bad verdict: " + v);
    return r;
}

ordered_json witness_json(const ExtremalWitness& w) {
    ordered_json j;
    j["graph6"] = w.graph6;
    j["graph_id"] = w.graph_hex;
    j["v"] = w.v;
    j["value"] = count_str(w.value);
    return j;
}

ExtremalWitness witness_from(const ordered_json& j) {
    ExtremalWitness w;
    w.graph6 = j.at("graph6").get<std::string>();
    w.graph_hex = j.at("graph_id").get<std::string>();
    w.v = j.at("v").get<int>();
    w.value = count_from(j.at("value").get<std::string>());
    return w;
}

ordered_json scan_report_json(const ScanReport& r) {
    ordered_json j;
    j["conjecture_id"] = r.conjecture_id;
    j["family"] = r.family;
    j["graphs_checked"] = r.graphs_checked;
    j["graphs_skipped"] = r.graphs_skipped;
    j["held"] = r.held();
    ordered_json viols = ordered_json::array();
    for (const ScanViolation& v : r.violations) {
        ordered_json jv;
        jv["graph6"] = v.graph6;
        jv["graph_id"] = v.graph_hex;
        jv["detail"] = v.detail;
        jv["comparison"] = comparison_json(v.cmp);
        viols.push_back(std::move(jv));
    }
    j["violations"] = std::move(viols);
    j["argmin"] = r.argmin ? witness_json(*r.argmin) : ordered_json(nullptr);
    j["argmax"] = r.argmax ? witness_json(*r.argmax) : ordered_json(nullptr);
    j["notes"] = r.notes;
    ordered_json table = ordered_json::array();
    for (const ProfileRow& row : r.table) {
        ordered_json jr;
        jr["graph6"] = row.graph6;
        jr["graph_id"] = row.graph_hex;
        jr["v"] = row.v;
        jr["components"] = row.components;
        ordered_json values = ordered_json::array();
        for (const BigCount& val : row.values) values.push_back(count_str(val));
        jr["values"] = std::move(values);
        table.push_back(std::move(jr));
    }
    j["table"] = std::move(table);
    ordered_json profile = ordered_json::array();
    for (const ProfileColumn& col : r.profile) {
        ordered_json jc;
        jc["k"] = col.k;
        jc["argmax_row"] = col.argmax_row;
        jc["ref_kdd"] = count_str(col.ref_kdd);
        jc["ref_kd1"] = count_str(col.ref_kd1);
        jc["argmax_is_kdd"] = col.argmax_is_kdd;
        jc["argmax_is_kd1"] = col.argmax_is_kd1;
        jc["cmp_vs_kdd"] = col.cmp_vs_kdd;
        jc["cmp_vs_kd1"] = col.cmp_vs_kd1;
        profile.push_back(std::move(jc));
    }
    j["profile"] = std::move(profile);
    return j;
}

ScanReport scan_report_from(const ordered_json& j) {
    ScanReport r;
    r.conjecture_id = j.at("conjecture_id").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.graphs_checked = j.at("graphs_checked").get<long long>();
    r.graphs_skipped = j.at("graphs_skipped").get<long long>();
    for (const auto& jv : j.at("violations")) {
        ScanViolation v;
        v.graph6 = jv.at("graph6").get<std::string>();
        v.graph_hex = jv.at("graph_id").get<std::string>();
        v.detail = jv.at("detail").get<std::string>();
        v.cmp = comparison_from(jv.at("comparison"));
        r.violations.push_back(std::move(v));
    }
    if (!j.at("argmin").is_null()) r.argmin = witness_from(j.at("argmin"));
    if (!j.at("argmax").is_null()) r.argmax = witness_from(j.at("argmax"));
    for (const auto& note : j.at("notes")) r.notes.push_back(note.get<std::string>());
    for (const auto& jr : j.at("table")) {
        ProfileRow row;
        row.graph6 = jr.at("graph6").get<std::string>();
        row.graph_hex = jr.at("graph_id").get<std::string>();
        row.v = jr.at("v").get<int>();
        row.components = jr.at("components").get<int>();
        for (const auto& val : jr.at("values"))
            row.values.push_back(count_from(val.get<std::string>()));
        r.table.push_back(std::move(row));
    }
    for (const auto& jc : j.at("profile")) {
        ProfileColumn col;
        col.k = jc.at("k").get<std::string>();
        col.argmax_row = jc.at("argmax_row").get<std::size_t>();
        col.ref_kdd = count_from(jc.at("ref_kdd").get<std::string>());
        col.ref_kd1 = count_from(jc.at("ref_kd1").get<std::string>());
        col.argmax_is_kdd = jc.at("argmax_is_kdd").get<bool>();
        col.argmax_is_kd1 = jc.at("argmax_is_kd1").get<bool>();
        col.cmp_vs_kdd = jc.at("cmp_vs_kdd").get<int>();
        col.cmp_vs_kd1 = jc.at("cmp_vs_kd1").get<int>();
        r.profile.push_back(std::move(col));
    }
    return r;
}

std::string dump(const ordered_json& j, int indent) {
    return indent >= 0 ? j.dump(indent) : j.dump();
}

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
}

/// Missing keys and type mismatches surface as library exceptions; fold them
/// into the documented invalid_argument contract.
template <typename Fn>
auto guarded(const char* what, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

void comparison_csv(std::ostringstream& out, const Comparison& c) {
    out << (c.relation == Relation::le ? "le" : "ge") << ','
        << (c.rational_mode ? "rational" : "integer") << ','
        << csv_escape(c.rational_mode ? rational_to_string(c.rlhs) : count_str(c.lhs)) << ','
        << c.lhs_exp << ','
        << csv_escape(c.rational_mode ? rational_to_string(c.rrhs) : count_str(c.rhs)) << ','
        << c.rhs_exp;
}

std::vector<int> mask_to_list(uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

} // namespace

const char* verdict_name(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::holds: return "holds";
        case BoundVerdict::tight: return "tight";
        case BoundVerdict::violated: return "violated";
    }
    return "holds";
}

std::string to_json(const BoundReport& report, int indent) {
    return dump(bound_report_json(report), indent);
}

std::string to_json(const std::vector<BoundReport>& reports, int indent) {
    ordered_json arr = ordered_json::array();
    for (const BoundReport& r : reports) arr.push_back(bound_report_json(r));
    return dump(arr, indent);
}

std::string to_json(const ScanReport& report, int indent) {
    return dump(scan_report_json(report), indent);
}

std::string to_json(const CountPolynomial& poly, int indent) {
    ordered_json j;
    switch (poly.kind) {
        case PolyKind::independence: j["kind"] = "independence"; break;
        case PolyKind::matching: j["kind"] = "matching"; break;
        case PolyKind::potts: j["kind"] = "potts"; break;
    }
    ordered_json coeffs = ordered_json::array();
    for (const BigCount& c : poly.coeffs) coeffs.push_back(count_str(c));
    j["coefficients"] = std::move(coeffs);
    return dump(j, indent);
}

std::string to_json(const SwapCertificate& cert, int indent) {
    ordered_json j;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : cert.bad_edges) edges.push_back(ordered_json::array({u, v}));
    j["bad_edges"] = std::move(edges);
    j["swap_set"] = mask_to_list(cert.swap_set);
    j["image"] = mask_to_list(cert.image);
    return dump(j, indent);
}

std::string to_json(const BstVerdict& verdict, int indent) {
    ordered_json j;
    j["is_target"] = verdict.is_target;
    j["coloring"] = verdict.coloring ? ordered_json(*verdict.coloring) : ordered_json(nullptr);
    j["odd_closed_walk"] =
        verdict.odd_closed_walk ? ordered_json(*verdict.odd_closed_walk) : ordered_json(nullptr);
    return dump(j, indent);
}

BoundReport bound_report_from_json(const std::string& text) {
    return guarded("bad bound report", [&] { return bound_report_from(parse(text)); });
}

std::vector<BoundReport> bound_reports_from_json(const std::string& text) {
    return guarded("bad bound report array", [&] {
        const ordered_json arr = parse(text);
        if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of reports");
        std::vector<BoundReport> out;
        for (const auto& j : arr) out.push_back(bound_report_from(j));
        return out;
    });
}

ScanReport scan_report_from_json(const std::string& text) {
    return guarded("bad scan report", [&] { return scan_report_from(parse(text)); });
}

CountPolynomial polynomial_from_json(const std::string& text) {
    return guarded("bad polynomial", [&]() -> CountPolynomial {
        const ordered_json j = parse(text);
        CountPolynomial p{PolyKind::independence, {}};
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "independence") p.kind = PolyKind::independence;
        else if (kind == "matching") p.kind = PolyKind::matching;
        else if (kind == "potts") p.kind = PolyKind::potts;
        else throw std::invalid_argument("bad polynomial kind: " + kind);
        for (const auto& c : j.at("coefficients"))
            p.coeffs.push_back(count_from(c.get<std::string>()));
        return p;
    });
}

std::string to_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream out;
    out << "bound_id,graph_id,params,verdict,relation,mode,lhs,lhs_exp,rhs,rhs_exp\n";
    for (const BoundReport& r : reports) {
        out << csv_escape(r.bound_id) << ',' << csv_escape(r.graph_id) << ','
            << csv_escape(r.params_text) << ',' << verdict_name(r.verdict) << ',';
        comparison_csv(out, r.cmp);
        out << '\n';
    }
    return out.str();
}

std::string to_csv(const ScanReport& report) {
    std::ostringstream out;
    if (!report.table.empty()) {
        out << "graph_id,graph6,v,components";
        if (report.profile.size() == 1 && report.profile[0].k.empty()) {
            out << ",value";
        } else if (!report.profile.empty()) {
            for (const ProfileColumn& col : report.profile) out << ",value_k" << col.k;
        } else {
            for (std::size_t j = 0; j < report.table[0].values.size(); ++j) out << ",value";
        }
        out << '\n';
        for (const ProfileRow& row : report.table) {
            out << csv_escape(row.graph_hex) << ',' << csv_escape(row.graph6) << ',' << row.v << ','
                << row.components;
            for (const BigCount& val : row.values) out << ',' << count_str(val);
            out << '\n';
        }
        return out.str();
    }
    out << "graph_id,graph6,detail,relation,mode,lhs,lhs_exp,rhs,rhs_exp\n";
    for (const ScanViolation& v : report.violations) {
        out << csv_escape(v.graph_hex) << ',' << csv_escape(v.graph6) << ','
            << csv_escape(v.detail) << ',';
        comparison_csv(out, v.cmp);
        out << '\n';
    }
    return out.str();
}

} // namespace exthom
