#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "unitgraph/classify.hpp"
#include "unitgraph/complex.hpp"
#include "unitgraph/dsl.hpp"
#include "unitgraph/indsets.hpp"
#include "unitgraph/radical.hpp"

using namespace unitgraph;

namespace {

const std::vector<std::string> kRings{"Z16", "GF(81)", "M2(GF(3))", "GA(GF(2), D4)", "GF(4) x GF(8)", "M2(GF(4))"};

RingPtr ring(std::size_t i) { return build_ring(parse_ring_expr(kRings[i])); }

MisLimits unlimited() {
  MisLimits l;
  l.max_sets.reset();
  l.time_budget.reset();
  return l;
}

void BM_BuildRing(benchmark::State& state) {
  const auto d = parse_ring_expr(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_ring(d));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_BuildRing)->DenseRange(0, 5);

void BM_Radical(benchmark::State& state) {
  const auto r = ring(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical(*r));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_Radical)->DenseRange(0, 5);

void BM_UnitGraph(benchmark::State& state) {
  const auto r = ring(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(*r, GraphKind::Unit));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_UnitGraph)->DenseRange(0, 5);

void BM_EnumerateMis(benchmark::State& state) {
  const auto g = build_graph(*ring(state.range(0)), GraphKind::Unit);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mis(g, {}, unlimited()).count);
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_EnumerateMis)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyWellCovered(benchmark::State& state) {
  const auto d = parse_ring_expr("M2(GF(3)) x GF(4) x Z2 x GF(8)");
  for (auto _ : state) benchmark::DoNotOptimize(classify_well_covered(d));
}
BENCHMARK(BM_ClassifyWellCovered);

void BM_Homology(benchmark::State& state) {
  std::string text = "Z2";
  for (int i = 1; i < state.range(0); ++i) text += " x Z2";
  const auto c = independence_complex(build_graph(*build_ring(parse_ring_expr(text)), GraphKind::Unit));
  const ComplexLimits wide{200000, 4096, 1000000};
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_gf2(c, wide));
  state.SetLabel(text);
}
BENCHMARK(BM_Homology)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CohenMacaulay(benchmark::State& state) {
  const auto c = independence_complex(build_graph(*build_ring(parse_ring_expr("Z2 x Z2 x Z2")), GraphKind::Unit));
  for (auto _ : state) benchmark::DoNotOptimize(is_cm_gf2(c));
}
BENCHMARK(BM_CohenMacaulay)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
