// Hot paths: the backtracking enumerations and the SNF solver.

#include <benchmark/benchmark.h>

#include "picmod/catalog.hpp"
#include "picmod/center.hpp"
#include "picmod/cocycle.hpp"
#include "picmod/modcat.hpp"
#include "picmod/picard.hpp"

using namespace picmod;

namespace {

QuadraticForm named(const char* name) { return realize(catalog_entry(name)); }

void BM_OrthogonalGroup_cube0(benchmark::State& state) {
    const QuadraticForm q = named("cube0");
    for (auto _ : state) benchmark::DoNotOptimize(orthogonal_group(q));
}
BENCHMARK(BM_OrthogonalGroup_cube0);

void BM_OrthogonalGroup_toricDouble(benchmark::State& state) {
    const QuadraticForm q = center_form(named("toric")).doubled;
    for (auto _ : state) benchmark::DoNotOptimize(orthogonal_group(q));
}
BENCHMARK(BM_OrthogonalGroup_toricDouble);

void BM_EnumeratePicard_z2z4(benchmark::State& state) {
    const QuadraticForm q = named("z2z4");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_picard(q));
}
BENCHMARK(BM_EnumeratePicard_z2z4);

void BM_EnumeratePicard_cube0Double(benchmark::State& state) {
    const QuadraticForm q = center_form(named("cube0")).doubled;
    const SizeGuard guard{10'000'000, 64, 12};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_picard(q, guard));
}
BENCHMARK(BM_EnumeratePicard_cube0Double)->Unit(benchmark::kMillisecond);

void BM_Trivializable_toric(benchmark::State& state) {
    const QuadraticForm q = named("toric");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trivializable(q));
}
BENCHMARK(BM_Trivializable_toric);

void BM_Cohomologous_z4(benchmark::State& state) {
    const AbelianCocycle a = standard_cocycle(named("z4std"));
    const AbelianCocycle b = standard_cocycle(named("z4tan"));
    for (auto _ : state) benchmark::DoNotOptimize(cohomologous(a, b));
}
BENCHMARK(BM_Cohomologous_z4);

void BM_ModuleCats_cube0(benchmark::State& state) {
    const QuadraticForm q = named("cube0");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_module_cats(q));
}
BENCHMARK(BM_ModuleCats_cube0);

}  // namespace

BENCHMARK_MAIN();
