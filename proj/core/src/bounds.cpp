#include "exthom/bounds.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "exthom/canonical.hpp"
#include "exthom/hom.hpp"
#include "exthom/observables.hpp"
#include "exthom/polynomials.hpp"
#include "exthom/products.hpp"
#include "exthom/standard.hpp"
#include "exthom/structure.hpp"

namespace exthom {

BoundVerdict verdict_of(const Comparison& c) {
    int ord = c.rational_mode ? compare_normalized(c.rlhs, c.lhs_exp, c.rrhs, c.rhs_exp)
                              : compare_normalized(c.lhs, c.lhs_exp, c.rhs, c.rhs_exp);
    if (ord == 0) return BoundVerdict::tight;
    bool ok = c.relation == Relation::le ? ord < 0 : ord > 0;
    return ok ? BoundVerdict::holds : BoundVerdict::violated;
}

namespace {

[[noreturn]] void hypothesis_fail(const std::string& bound_id, const std::string& why) {
    throw std::invalid_argument("hypothesis violated for " + bound_id + ": " + why);
}

[[noreturn]] void missing_param(const std::string& bound_id, const char* which) {
    throw std::invalid_argument(bound_id + " requires parameter " + which);
}

struct Checker {
    const Graph& g;
    const std::string& id;
    const BoundParams& p;
    GraphFacts facts;
    Comparison cmp;
    std::ostringstream params_text;

    Checker(const Graph& graph, const std::string& bound_id, const BoundParams& params)
        : g(graph), id(bound_id), p(params), facts(analyze(graph)) {}

    int need_regular(int min_d = 0) const {
        if (!facts.regular_degree)
            hypothesis_fail(id, "graph is not regular");
        if (*facts.regular_degree < min_d)
            hypothesis_fail(id, "degree must be at least " + std::to_string(min_d));
        return *facts.regular_degree;
    }

    void need_bipartite() const {
        if (!facts.bipartition) hypothesis_fail(id, "graph is not bipartite");
    }

    const LoopGraph& need_h() const {
        if (!p.h) missing_param(id, "H");
        return *p.h;
    }

    Rational need_lambda() const {
        if (!p.lambda) missing_param(id, "lambda");
        if (sgn(*p.lambda) < 0) hypothesis_fail(id, "fugacity must be nonnegative");
        return *p.lambda;
    }

    int need_int(const std::optional<int>& v, const char* name, int least) const {
        if (!v) missing_param(id, name);
        if (*v < least)
            hypothesis_fail(id, std::string(name) + " must be at least " + std::to_string(least));
        return *v;
    }

    // lhs^{1/v(G)} <= hom-count of the reference graph ^{1/ref order}.
    void cross_power(const BigCount& lhs, const BigCount& rhs, int rhs_order, Relation rel) {
        cmp.relation = rel;
        cmp.lhs = lhs;
        cmp.lhs_exp = static_cast<unsigned>(g.n());
        cmp.rhs = rhs;
        cmp.rhs_exp = static_cast<unsigned>(rhs_order);
    }

    void plain(const BigCount& lhs, const BigCount& rhs, Relation rel) {
        cmp.relation = rel;
        cmp.lhs = lhs;
        cmp.rhs = rhs;
        cmp.lhs_exp = cmp.rhs_exp = 1;
    }

    void rational_cross(const Rational& lhs, unsigned le, const Rational& rhs, unsigned re,
                        Relation rel) {
        cmp.relation = rel;
        cmp.rational_mode = true;
        cmp.rlhs = lhs;
        cmp.lhs_exp = le;
        cmp.rrhs = rhs;
        cmp.rhs_exp = re;
    }

    void run();
};

// i_t of c disjoint copies of G, via the polynomial power.
BigCount ind_count_of_size_copies(const Graph& g, int copies, int t) {
    return coefficient(poly_pow(independence_polynomial(g), copies), t);
}

void Checker::run() {
    if (g.n() == 0) hypothesis_fail(id, "empty graph");
    if (id == "kahn_max_ind") {
        int d = need_regular(1);
        need_bipartite();
        params_text << "d=" << d;
        cross_power(independent_set_count(g), pow2(d + 1) - 1, 2 * d, Relation::le);

    } else if (id == "zhao_max_ind") {
        int d = need_regular(1);
        params_text << "d=" << d;
        cross_power(independent_set_count(g),
                    independent_set_count(complete_bipartite(d, d)), 2 * d, Relation::le);

    } else if (id == "gt_max_hom") {
        int d = need_regular(1);
        need_bipartite();
        const LoopGraph& h = need_h();
        params_text << "d=" << d << ", H=" << form_to_hex(canonical_form(h));
        cross_power(hom_count(g, h), hom_count(complete_bipartite(d, d), h), 2 * d,
                    Relation::le);

    } else if (id == "threshold_max_hom") {
        int d = need_regular(1);
        const LoopGraph& h = need_h();
        LoopThresholdVerdict tv = is_loop_threshold(h);
        if (tv.status == ThresholdStatus::no)
            hypothesis_fail(id, "H is not a loop-threshold graph");
        if (tv.status == ThresholdStatus::unknown)
            hypothesis_fail(id, "loop-threshold status of H could not be certified");
        params_text << "d=" << d << ", H=" << form_to_hex(canonical_form(h));
        cross_power(hom_count(g, h), hom_count(complete_bipartite(d, d), h), 2 * d,
                    Relation::le);

    } else if (id == "bst_double_cover") {
        const LoopGraph& h = need_h();
        if (!is_bipartite_swapping_target(h).is_target)
            hypothesis_fail(id, "H is not a bipartite swapping target");
        params_text << "H=" << form_to_hex(canonical_form(h));
        BigCount base = hom_count(g, h);
        plain(base * base, hom_count(double_cover(g), h), Relation::le);

    } else if (id == "wr_max") {
        int d = need_regular(1);
        params_text << "d=" << d;
        cross_power(hom_count(g, h_wr()), hom_count(complete(d + 1), h_wr()), d + 1,
                    Relation::le);

    } else if (id == "sernau_loop_power") {
        int d = need_regular(1);
        if (!p.power_base) missing_param(id, "A");
        if (!p.power_exponent) missing_param(id, "B");
        if (!analyze(*p.power_exponent).bipartition)
            hypothesis_fail(id, "exponent graph B must be bipartite");
        LoopGraph h = looped_subgraph(exponentiate(*p.power_base, *p.power_exponent));
        params_text << "d=" << d << ", H=l(A^B)=" << form_to_hex(canonical_form(h));
        cross_power(hom_count(g, h), hom_count(complete(d + 1), h), d + 1, Relation::le);

    } else if (id == "bigraph_target_max") {
        int d = need_regular(1);
        if (!p.bigraph_a) missing_param(id, "A");
        if (!p.bigraph_b) missing_param(id, "B");
        LoopGraph h = bigraph_hom_target(*p.bigraph_a, *p.bigraph_b);
        params_text << "d=" << d << ", H=" << form_to_hex(canonical_form(h));
        cross_power(hom_count(g, h), hom_count(complete(d + 1), h), d + 1, Relation::le);

    } else if (id == "extended_line_max") {
        int d = need_regular(1);
        const LoopGraph& raw = need_h();
        Graph base = raw.simple();  // loops would not be a plain graph
        if (!analyze(base).bipartition)
            hypothesis_fail(id, "the extended-line construction needs bipartite H");
        LoopGraph h = extended_line_graph(base);
        params_text << "d=" << d << ", H~=" << form_to_hex(canonical_form(h));
        cross_power(hom_count(g, h), hom_count(complete(d + 1), h), d + 1, Relation::le);

    } else if (id == "indep_poly_max") {
        int d = need_regular(1);
        Rational lam = need_lambda();
        params_text << "d=" << d << ", lambda=" << rational_to_string(lam);
        Rational lhs = evaluate(independence_polynomial(g), lam);
        Rational rhs = evaluate(independence_polynomial(complete_bipartite(d, d)), lam);
        rational_cross(lhs, g.n(), rhs, 2 * d, Relation::le);

    } else if (id == "occupancy_max") {
        int d = need_regular(1);
        Rational lam = need_lambda();
        params_text << "d=" << d << ", lambda=" << rational_to_string(lam);
        rational_cross(occupancy_fraction(g, lam), 1,
                       occupancy_fraction(complete_bipartite(d, d), lam), 1, Relation::le);

    } else if (id == "ind_min") {
        int d = need_regular(0);
        params_text << "d=" << d;
        cross_power(independent_set_count(g), BigCount(d + 2), d + 1, Relation::ge);

    } else if (id == "ind_min_by_size") {
        int d = need_regular(0);
        int t = need_int(p.t, "t", 0);
        // Blow both sides up to the least common multiple order so the
        // disjoint-copies form of the theorem applies verbatim.
        int n = g.n();
        int copies = (d + 1) / std::gcd(n, d + 1);
        int cliques = copies * n / (d + 1);
        params_text << "d=" << d << ", t=" << t << ", copies=" << copies;
        plain(ind_count_of_size_copies(g, copies, t),
              ind_count_of_size_copies(complete(d + 1), cliques, t), Relation::ge);

    } else if (id == "color_min") {
        int d = need_regular(1);
        int q = need_int(p.q, "q", 2);
        params_text << "d=" << d << ", q=" << q;
        cross_power(coloring_count(g, q), coloring_count(complete(d + 1), q), d + 1,
                    Relation::ge);

    } else if (id == "color_min_bip") {
        int d = need_regular(1);
        need_bipartite();
        int q = need_int(p.q, "q", 2);
        params_text << "d=" << d << ", q=" << q;
        // hom² ≥ q^{2n}(1−1/q)^{dn} cleared of denominators by q^{dn}.
        BigCount hom = coloring_count(g, q);
        unsigned long n = g.n();
        plain(hom * hom * big_pow(q, d * n),
              big_pow(q, 2 * n) * big_pow(q - 1, d * n), Relation::ge);

    } else if (id == "biregular_max") {
        if (!facts.biregular) hypothesis_fail(id, "graph is not biregular");
        auto [a, b] = *facts.biregular;
        const LoopGraph& h = need_h();
        params_text << "a=" << a << ", b=" << b << ", H=" << form_to_hex(canonical_form(h));
        cross_power(hom_count(g, h), hom_count(complete_bipartite(a, b), h), a + b,
                    Relation::le);

    } else if (id == "kruskal_katona") {
        int t = need_int(p.t, "t", 0);
        params_text << "t=" << t << ", m=" << facts.m;
        BigCount lhs = coefficient(independence_polynomial(g), t);
        BigCount rhs = coefficient(independence_polynomial(lex_graph(g.n(), facts.m)), t);
        plain(lhs, rhs, Relation::le);

    } else if (id == "min_degree_max") {
        int delta = need_int(p.delta, "delta", 0);
        if (delta >= g.n()) hypothesis_fail(id, "delta must be below the order");
        if (facts.min_degree < delta)
            hypothesis_fail(id, "minimum degree below delta");
        int n = g.n();
        if (p.t) {
            int t = need_int(p.t, "t", 3);
            if (2 * delta > n) hypothesis_fail(id, "the size-t form needs delta <= n/2");
            params_text << "delta=" << delta << ", t=" << t;
            BigCount lhs = coefficient(independence_polynomial(g), t);
            BigCount rhs =
                coefficient(independence_polynomial(complete_bipartite(delta, n - delta)), t);
            plain(lhs, rhs, Relation::le);
        } else {
            int a = n / (n - delta), b = n % (n - delta);
            params_text << "delta=" << delta << ", a=" << a << ", b=" << b;
            BigCount rhs = a * (pow2(n - delta) - 1) + pow2(b);
            plain(independent_set_count(g), rhs, Relation::le);
        }

    } else if (id == "pm_max") {
        int d = need_regular(1);
        params_text << "d=" << d;
        cross_power(perfect_matching_count(g), factorial(d), 2 * d, Relation::le);

    } else if (id == "matching_poly_max") {
        int d = need_regular(1);
        Rational lam = need_lambda();
        params_text << "d=" << d << ", lambda=" << rational_to_string(lam);
        Rational lhs = evaluate(matching_polynomial(g), lam);
        Rational rhs = evaluate(matching_polynomial(complete_bipartite(d, d)), lam);
        rational_cross(lhs, g.n(), rhs, 2 * d, Relation::le);

    } else if (id == "pm_min_bip") {
        int d = need_regular(1);
        need_bipartite();
        unsigned long half = g.n() / 2;
        params_text << "d=" << d;
        BigCount pm = perfect_matching_count(g);
        if (d == 1) {
            plain(pm, BigCount(1), Relation::ge);  // (d−1)^0 = 1, no scaling needed
        } else {
            plain(pm * big_pow(d, (d - 2) * half), big_pow(d - 1, (d - 1) * half),
                  Relation::ge);
        }

    } else {
        throw std::invalid_argument("unknown bound id: " + id);
    }
}

} // namespace

BoundReport check_bound(const Graph& g, const std::string& bound_id, const BoundParams& params) {
    Checker c(g, bound_id, params);
    c.run();
    BoundReport report;
    report.bound_id = bound_id;
    report.graph_id = form_to_hex(canonical_form(g));
    report.params_text = c.params_text.str();
    report.cmp = c.cmp;
    report.verdict = verdict_of(report.cmp);
    return report;
}

const std::vector<std::string>& bound_catalog() {
    static const std::vector<std::string> ids = {
        "kahn_max_ind",     "zhao_max_ind",      "gt_max_hom",        "threshold_max_hom",
        "bst_double_cover", "wr_max",            "sernau_loop_power", "bigraph_target_max",
        "extended_line_max", "indep_poly_max",   "occupancy_max",     "ind_min",
        "ind_min_by_size",  "color_min",         "color_min_bip",     "biregular_max",
        "kruskal_katona",   "min_degree_max",    "pm_max",            "matching_poly_max",
        "pm_min_bip"};
    return ids;
}

} // namespace exthom
