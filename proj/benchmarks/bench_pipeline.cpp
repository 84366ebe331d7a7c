#include <benchmark/benchmark.h>

#include "lfid/baselines.hpp"
#include "lfid/lfid_pipeline.hpp"
#include "lfid/topology.hpp"

namespace {

using namespace lfid;

Topology make_graph(int n) {
  // degree ~4
  return random_connected_graph(n, n + 1, 1, 10, 9001);
}

void BM_FillFib(benchmark::State& state) {
  const Topology topo = make_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fill_fib(topo));
  }
}
BENCHMARK(BM_FillFib)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_LfidPipeline(benchmark::State& state) {
  const Topology topo = make_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_lfid(topo));
  }
}
BENCHMARK(BM_LfidPipeline)
    ->Arg(25)
    ->Arg(50)
    ->Arg(100)
    ->Unit(benchmark::kMillisecond);

void BM_LfidPipelineParallel(benchmark::State& state) {
  const Topology topo = make_graph(100);
  PipelineOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_lfid(topo, options));
  }
}
BENCHMARK(BM_LfidPipelineParallel)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_RemoveLoops(benchmark::State& state) {
  const Topology topo = make_graph(static_cast<int>(state.range(0)));
  const AllNodeFib filled = fill_fib(topo);
  for (auto _ : state) {
    AllNodeFib copy = filled;
    benchmark::DoNotOptimize(remove_loops(std::move(copy), topo));
  }
}
BENCHMARK(BM_RemoveLoops)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  const Topology topo = make_graph(100);
  const Algorithm algo = static_cast<Algorithm>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_fib(topo, algo));
  }
}
BENCHMARK(BM_Baseline)
    ->Arg(static_cast<int>(Algorithm::Ecmp))
    ->Arg(static_cast<int>(Algorithm::Dw))
    ->Arg(static_cast<int>(Algorithm::Dwe))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
