#include <benchmark/benchmark.h>

#include "ellgal/aut_group.hpp"
#include "ellgal/enumerator.hpp"
#include "ellgal/function_field.hpp"
#include "ellgal/realizability.hpp"
#include "ellgal/registry.hpp"

using namespace ellgal;

static void BM_ClosureExc2(benchmark::State& state) {
  const Witness w = realize(GroupLabel::exc2(state.range(0), 13, 4));
  for (auto _ : state) benchmark::DoNotOptimize(closure(w.generators).order());
}
BENCHMARK(BM_ClosureExc2)->Arg(1)->Arg(2)->Arg(3);

static void BM_Classify1300(benchmark::State& state) {
  const FiniteSubgroup g = closure(realize(GroupLabel::exc2(5, 13, 4)).generators);
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify1300);

static void BM_Enumerate(benchmark::State& state) {
  const auto lattice = static_cast<LatticeClass>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(lattice, state.range(1)).size());
}
BENCHMARK(BM_Enumerate)
    ->Args({static_cast<int>(LatticeClass::generic), 4})
    ->Args({static_cast<int>(LatticeClass::square), 4})
    ->Args({static_cast<int>(LatticeClass::hexagonal), 3})
    ->Unit(benchmark::kMillisecond);

static void BM_MapDegree(benchmark::State& state) {
  const RegistryEntry& e = *find_registry_entry(static_cast<int>(state.range(0)));
  const CoverSpec spec = build_cover_spec(e, e.parameter_sets().front());
  for (auto _ : state) benchmark::DoNotOptimize(map_degree(spec.s));
}
BENCHMARK(BM_MapDegree)->DenseRange(13, 19);

static void BM_VerifyCover(benchmark::State& state) {
  const RegistryEntry& e = *find_registry_entry(static_cast<int>(state.range(0)));
  const CoverSpec spec = build_cover_spec(e, e.parameter_sets().front());
  for (auto _ : state) benchmark::DoNotOptimize(verify_galois_cover(spec).passed);
}
BENCHMARK(BM_VerifyCover)->DenseRange(13, 19)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
