#include <benchmark/benchmark.h>

#include "confemb/catalog.hpp"
#include "confemb/conformal.hpp"

using namespace confemb;

namespace {

// Uncached construction; shared_root_system would memoize.
void BM_BuildRootSystem(benchmark::State& state, const char* type) {
  const SimpleLieType t = SimpleLieType::parse(type);
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(t));
}
BENCHMARK_CAPTURE(BM_BuildRootSystem, E6, "E6");
BENCHMARK_CAPTURE(BM_BuildRootSystem, E8, "E8");
BENCHMARK_CAPTURE(BM_BuildRootSystem, D8, "D8");

void BM_BorelDeSiebenthal(benchmark::State& state, const char* type) {
  const auto g = shared_root_system(SimpleLieType::parse(type));
  for (auto _ : state) benchmark::DoNotOptimize(borel_de_siebenthal(g));
}
BENCHMARK_CAPTURE(BM_BorelDeSiebenthal, E8, "E8");
BENCHMARK_CAPTURE(BM_BorelDeSiebenthal, B8, "B8");

void BM_ConformalLevels(benchmark::State& state, const char* spec) {
  const ReductiveSubalgebra k = resolve_subalgebra(spec).bottom();
  const Branching b = orthocomplement_branching(k);
  for (auto _ : state) benchmark::DoNotOptimize(conformal_levels(k, b));
}
BENCHMARK_CAPTURE(BM_ConformalLevels, D4_gl3, "D4/sl3+u1+u1");
BENCHMARK_CAPTURE(BM_ConformalLevels, E8_A4A4, "E8/A4+A4");

void BM_Orthocomplement(benchmark::State& state, const char* spec) {
  const ReductiveSubalgebra k = resolve_subalgebra(spec).bottom();
  for (auto _ : state) benchmark::DoNotOptimize(orthocomplement_branching(k));
}
BENCHMARK_CAPTURE(BM_Orthocomplement, E8_A2E6, "E8/A2+E6");

void BM_EnumerateChains(benchmark::State& state, const char* type) {
  const auto g = shared_root_system(SimpleLieType::parse(type));
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_conformal_chains(g, depth));
}
BENCHMARK_CAPTURE(BM_EnumerateChains, E7, "E7")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateChains, F4, "F4")->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CriticalScan(benchmark::State& state) {
  const auto catalog = builtin_critical_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(critical_scan(catalog));
}
BENCHMARK(BM_CriticalScan)->Unit(benchmark::kMillisecond);

void BM_LevelBound(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level_bound_check(m));
}
BENCHMARK(BM_LevelBound)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
