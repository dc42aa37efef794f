// Serial vs parallel kernels. Arg(0) is serial, Arg(1) parallel.
#include <benchmark/benchmark.h>

#include "rdom/cover.hpp"
#include "rdom/connect.hpp"
#include "rdom/domset.hpp"
#include "rdom/generators.hpp"
#include "rdom/protocols.hpp"

using namespace rdom;

namespace {

const Graph& sample() {
  static const Graph g = gen::partial_ktree(20000, 3, 0.8, 5);
  return g;
}

const LinearOrder& sample_order() {
  static const LinearOrder order = degeneracy_order(sample());
  return order;
}

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_wreach(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wreach(sample(), sample_order(), 4, mode(state)));
}

void BM_verify_cover(benchmark::State& state) {
  const Cover cover = build_cover(sample(), sample_order(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cover(sample(), 2, cover, mode(state)));
}

void BM_d_partition(benchmark::State& state) {
  const auto d = domset(sample(), sample_order(), 2).dominators;
  for (auto _ : state) benchmark::DoNotOptimize(d_partition(sample(), d, 2, mode(state)));
}

void BM_simulate_domset(benchmark::State& state) {
  static const Graph g = gen::grid(60, 60);
  static const LinearOrder order = heuristic_wcol_order(g, 4);
  RunOptions opts;
  opts.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(protocol_domset(g, order, 2, SimModel::congest_bc(1e6), opts));
}

}  // namespace

BENCHMARK(BM_wreach)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_cover)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_d_partition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simulate_domset)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
