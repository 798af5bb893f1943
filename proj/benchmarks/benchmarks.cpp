#include "zmu/catalog.hpp"
#include "zmu/graphs.hpp"
#include "zmu/iso.hpp"
#include "zmu/scheme.hpp"
#include "zmu/search.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace zmu;

void BM_BlowUpT98(benchmark::State& state) {
    const Scheme scheme = named("T98").scheme;
    for (auto _ : state) benchmark::DoNotOptimize(blow_up(scheme));
}
BENCHMARK(BM_BlowUpT98);

void BM_J2MatrixT98(benchmark::State& state) {
    const BinaryMatrix b = blow_up(named("T98").scheme);
    for (auto _ : state) benchmark::DoNotOptimize(is_j2_free_matrix(b));
}
BENCHMARK(BM_J2MatrixT98);

void BM_J2CriterionT98(benchmark::State& state) {
    const Scheme scheme = named("T98").scheme;
    for (auto _ : state) benchmark::DoNotOptimize(is_j2_free_scheme(scheme));
}
BENCHMARK(BM_J2CriterionT98);

void BM_GirthT96(benchmark::State& state) {
    const Graph g = Graph::from_adjacency(blow_up(named("T96").scheme));
    for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_GirthT96);

void BM_CanonicalKrcadinac(benchmark::State& state) {
    const IncidenceStructure inc(
        blow_up(krcadinac_T(krcadinac_named_params("T360"))));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(inc));
}
BENCHMARK(BM_CanonicalKrcadinac);

void BM_AutHoffmanSingleton(benchmark::State& state) {
    const Graph g = Graph::from_adjacency(robertson_hs());
    Coloring coloring;
    coloring.classes.push_back(std::vector<int>(50));
    for (int v = 0; v < 50; ++v) coloring.classes[0][v] = v;
    for (auto _ : state) {
        const CanonResult result = canonize_colored(g, coloring);
        benchmark::DoNotOptimize(permutation_group_order(50, result.generators));
    }
}
BENCHMARK(BM_AutHoffmanSingleton);

void BM_CensusN35K6(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(census_cyclic(35, 6));
}
BENCHMARK(BM_CensusN35K6);

} // namespace

BENCHMARK_MAIN();
