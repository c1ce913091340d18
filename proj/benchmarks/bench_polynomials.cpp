#include <benchmark/benchmark.h>

#include "ribbon/generate.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/universality.hpp"

namespace {

ribbon::RibbonGraph sample(int edges, int flags) {
  ribbon::GenerateOptions opt;
  opt.vertices = 4;
  opt.edges = edges;
  opt.flags = flags;
  opt.twist_prob = 0.3;
  return ribbon::random_graph(opt, 12);
}

void BM_StateSum(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::state_sum_r(g));
}
BENCHMARK(BM_StateSum)->DenseRange(4, 14, 2)->Unit(benchmark::kMillisecond);

void BM_StateSumParallel(benchmark::State& state) {
  const auto g = sample(14, 4);
  const ribbon::StateSumOptions opt{true, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::state_sum_r(g, opt));
}
BENCHMARK(BM_StateSumParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Recurrence(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::recurrence_r(g));
}
BENCHMARK(BM_Recurrence)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ExtractLambdas(benchmark::State& state) {
  const ribbon::PhiOracle<ribbon::BRPoly> phi = [](const ribbon::RibbonGraph& g) { return ribbon::state_sum_r(g); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ribbon::extract_lambdas<ribbon::BRPoly>(phi, ribbon::BRPoly::var_x(), static_cast<int>(state.range(0)), 2));
  }
}
BENCHMARK(BM_ExtractLambdas)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
