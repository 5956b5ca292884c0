// Microbenchmarks for the hot paths: hom counting, polynomial assembly,
// canonical labeling, family enumeration, and the scan driver.

#include <benchmark/benchmark.h>

#include "exthom/bignum.hpp"
#include "exthom/canonical.hpp"
#include "exthom/enumerate.hpp"
#include "exthom/hom.hpp"
#include "exthom/observables.hpp"
#include "exthom/polynomials.hpp"
#include "exthom/standard.hpp"
#include "exthom/structure.hpp"

namespace {

using namespace exthom;

void BM_hom_petersen_k3(benchmark::State& state) {
    const Graph g = petersen();
    const LoopGraph h(complete(3));
    for (auto _ : state) {
        BigCount r = hom_count(g, h);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_hom_petersen_k3);

void BM_hom_double_cover_heawood(benchmark::State& state) {
    const Graph g = double_cover(heawood());
    const LoopGraph h(complete(3));
    for (auto _ : state) {
        BigCount r = hom_count(g, h);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_hom_double_cover_heawood);

void BM_independent_sets_heawood(benchmark::State& state) {
    const Graph g = heawood();
    for (auto _ : state) {
        BigCount r = independent_set_count(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_independent_sets_heawood);

void BM_independence_polynomial(benchmark::State& state) {
    const Graph g = complete_bipartite(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CountPolynomial p = independence_polynomial(g);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_independence_polynomial)->Arg(4)->Arg(6)->Arg(8);

void BM_matching_polynomial_heawood(benchmark::State& state) {
    const Graph g = heawood();
    for (auto _ : state) {
        CountPolynomial p = matching_polynomial(g);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_matching_polynomial_heawood);

void BM_canonical_form_petersen(benchmark::State& state) {
    const Graph g = petersen();
    for (auto _ : state) {
        std::string form = canonical_form(g);
        benchmark::DoNotOptimize(form);
    }
}
BENCHMARK(BM_canonical_form_petersen);

void BM_enumerate_cubic(benchmark::State& state) {
    const FamilySpec spec = parse_family_spec("d=3,connected,n=" +
                                              std::to_string(state.range(0)));
    for (auto _ : state) {
        std::vector<Graph> graphs = enumerate_family(spec);
        benchmark::DoNotOptimize(graphs);
    }
}
BENCHMARK(BM_enumerate_cubic)->Arg(8)->Arg(10);

void BM_occupancy_fraction(benchmark::State& state) {
    const Graph g = petersen();
    const Rational lambda(1);
    for (auto _ : state) {
        Rational alpha = occupancy_fraction(g, lambda);
        benchmark::DoNotOptimize(alpha);
    }
}
BENCHMARK(BM_occupancy_fraction);

}  // namespace

BENCHMARK_MAIN();
