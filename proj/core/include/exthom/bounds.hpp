#ifndef EXTHOM_BOUNDS_HPP
#define EXTHOM_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "exthom/bignum.hpp"
#include "exthom/graph.hpp"

namespace exthom {

enum class Relation { le, ge };
enum class BoundVerdict { holds, tight, violated };

/// One exact normalized comparison lhs^{1/lhs_exp} REL rhs^{1/rhs_exp},
/// recorded with enough data to recompute the verdict. Integer bases unless
/// rational_mode (fugacity-parametrized bounds).
struct Comparison {
    Relation relation = Relation::le;
    bool rational_mode = false;
    BigCount lhs = 0, rhs = 0;
    Rational rlhs = 0, rrhs = 0;
    unsigned lhs_exp = 1, rhs_exp = 1;
};

BoundVerdict verdict_of(const Comparison& c);

struct BoundReport {
    std::string bound_id;
    std::string graph_id;  // canonical form, hex
    std::string params_text;
    Comparison cmp;
    BoundVerdict verdict = BoundVerdict::holds;
};

/// Parameters for check_bound; each checker validates that the fields it
/// needs are present.
struct BoundParams {
    std::optional<LoopGraph> h;           // target H
    std::optional<LoopGraph> power_base;  // A of the loop-power bound
    std::optional<Graph> power_exponent;  // B of the loop-power bound (bipartite)
    std::optional<Bigraph> bigraph_a, bigraph_b;
    std::optional<int> q, t, delta;
    std::optional<Rational> lambda;
};

/// Catalog ids:
///   kahn_max_ind, zhao_max_ind, gt_max_hom, threshold_max_hom,
///   bst_double_cover, wr_max, sernau_loop_power, bigraph_target_max,
///   extended_line_max, indep_poly_max, occupancy_max, ind_min,
///   ind_min_by_size, color_min, color_min_bip, biregular_max,
///   kruskal_katona, min_degree_max, pm_max, matching_poly_max, pm_min_bip.
/// Hypothesis violations (wrong regularity, missing bipartiteness, targets
/// failing their structural tests, missing parameters) throw
/// std::invalid_argument — they are never verdicts.
BoundReport check_bound(const Graph& g, const std::string& bound_id, const BoundParams& params);

const std::vector<std::string>& bound_catalog();

} // namespace exthom

#endif
