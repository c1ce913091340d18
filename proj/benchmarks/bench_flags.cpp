#include <benchmark/benchmark.h>

#include "ribbon/flags.hpp"
#include "ribbon/generate.hpp"

namespace {

void BM_LegalMoves(benchmark::State& state) {
  ribbon::GenerateOptions opt;
  opt.vertices = 3;
  opt.edges = 4;
  opt.flags = static_cast<int>(state.range(0));
  const auto g = ribbon::random_graph(opt, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::legal_flag_moves(g));
}
BENCHMARK(BM_LegalMoves)->DenseRange(1, 7, 2);

// Reversing the flags of one face visits the whole class.
void BM_EquivalenceSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<ribbon::Stub> fwd, rev;
  std::set<std::string> flags;
  for (int i = 0; i < n; ++i) {
    const std::string id = "f" + std::to_string(i);
    flags.insert(id);
    fwd.push_back(ribbon::Stub::flag(id));
  }
  rev.assign(fwd.rbegin(), fwd.rend());
  const ribbon::RibbonGraph a({{"v", fwd}}, {}, flags);
  const ribbon::RibbonGraph b({{"v", rev}}, {}, flags);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::flag_equivalent(a, b, 100000));
}
BENCHMARK(BM_EquivalenceSearch)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
