#ifndef EXTHOM_SCAN_HPP
#define EXTHOM_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "exthom/bignum.hpp"
#include "exthom/bounds.hpp"
#include "exthom/enumerate.hpp"
#include "exthom/graph.hpp"

namespace exthom {

/// One graph that failed a scanned conjecture, with the exact comparison so
/// the violation can be recomputed from the report alone.
struct ScanViolation {
    std::string graph6;
    std::string graph_hex;  // canonical form, hex
    std::string detail;     // sub-case that failed, e.g. "q=3, x=1/2" or "t=4"
    Comparison cmp;
};

struct ExtremalWitness {
    std::string graph6;
    std::string graph_hex;
    int v = 0;
    BigCount value = 0;  // tracked quantity; ranking uses value^{1/v}
};

/// Value-table row for profile scans: `values` is aligned with the grid
/// columns (a single entry for a plain target).
struct ProfileRow {
    std::string graph6;
    std::string graph_hex;
    int v = 0;
    int components = 0;
    std::vector<BigCount> values;
};

/// Per-grid-point profile summary. `k` is the grid value as a decimal
/// string (empty for a plain target). cmp_* hold the sign of
/// argmax^{1/v} − reference^{1/v_ref}.
struct ProfileColumn {
    std::string k;
    std::size_t argmax_row = 0;
    BigCount ref_kdd = 0, ref_kd1 = 0;
    bool argmax_is_kdd = false, argmax_is_kd1 = false;
    int cmp_vs_kdd = 0, cmp_vs_kd1 = 0;
};

struct ScanReport {
    std::string conjecture_id;
    std::string family;
    long long graphs_checked = 0;
    long long graphs_skipped = 0;  // outside the conjecture's hypotheses
    std::vector<ScanViolation> violations;
    std::optional<ExtremalWitness> argmin, argmax;
    std::vector<std::string> notes;
    std::vector<ProfileRow> table;        // profile scans only
    std::vector<ProfileColumn> profile;   // profile scans only

    bool held() const { return violations.empty(); }
};

struct ScanParams {
    std::optional<LoopGraph> h;      // target, for scanners that take one
    int q = 0;                       // color/Potts state count
    std::vector<Rational> x_grid;    // Potts grid; default {1/4, 1/2, 3/4}
    std::vector<int> k_grid;         // profile grid; empty = plain target
    int workers = 1;
    std::string cache_dir;           // empty = enumerate afresh
    EnumerationCaps caps;
};

/// Conjecture ids: coloring_max, color_double_cover, potts_energy,
/// ind_fixed_size, mat_fixed_size, kahn_irregular, galvin_irregular,
/// triangle_free_max, girth_extrema, fixture_planted (self-test: flags
/// every graph). Unknown ids throw std::invalid_argument.
ScanReport scan_conjecture(const std::string& conjecture_id, const FamilySpec& family,
                           const ScanParams& params = {});

const std::vector<std::string>& scan_catalog();

/// Exact hom(·,H)^{1/v} ranking over the family, with reference values for
/// K_{d,d} and K_{d+1}. With k_grid set, H must be the loopless K_d and the
/// profiled target is kK_d via hom(G,kK_d) = Π_components k·hom(C,K_d).
ScanReport maximizer_profile(int d, const FamilySpec& family, const LoopGraph& h,
                             const ScanParams& params = {});

} // namespace exthom

#endif
