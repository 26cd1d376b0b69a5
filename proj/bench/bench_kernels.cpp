// Serial reference kernels against their OpenMP counterparts.

#include <map>

#include <benchmark/benchmark.h>

#include "ooc/clique_search.hpp"
#include "ooc/compat_graph.hpp"
#include "ooc/correlation_filter.hpp"
#include "ooc/enumeration.hpp"
#include "ooc/pipeline.hpp"

namespace {

std::vector<ooc::Codeword> candidates(int n, int w) {
  std::vector<ooc::Codeword> out;
  for (const auto& comp : ooc::enumerate_compositions(n, w)) out.push_back(ooc::composition_to_codeword(comp));
  return out;
}

const ooc::CompatibilityGraph& graph_for(int n) {
  static std::map<int, ooc::CompatibilityGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ooc::run_pipeline({n, 3, 1, 1}).graph).first;
  return it->second;
}

void BM_FilterSerial(benchmark::State& state) {
  const auto codes = candidates(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ooc::serial::filter_codes(codes, 1));
}

void BM_FilterParallel(benchmark::State& state) {
  const auto codes = candidates(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ooc::filter_codes(codes, 1));
}

void BM_GraphSerial(benchmark::State& state) {
  const auto codes = ooc::filter_codes(candidates(static_cast<int>(state.range(0)), 3), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ooc::serial::build_graph(codes, 1));
}

void BM_GraphParallel(benchmark::State& state) {
  const auto codes = ooc::filter_codes(candidates(static_cast<int>(state.range(0)), 3), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ooc::build_graph(codes, 1));
}

void BM_CliqueCountSerial(benchmark::State& state) {
  const auto& graph = graph_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ooc::serial::count_cliques(graph, 4));
}

void BM_CliqueCountParallel(benchmark::State& state) {
  const auto& graph = graph_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ooc::count_cliques(graph, 4));
}

}  // namespace

BENCHMARK(BM_FilterSerial)->Arg(40)->Arg(60);
BENCHMARK(BM_FilterParallel)->Arg(40)->Arg(60);
BENCHMARK(BM_GraphSerial)->Arg(61)->Arg(91);
BENCHMARK(BM_GraphParallel)->Arg(61)->Arg(91);
BENCHMARK(BM_CliqueCountSerial)->Arg(25)->Arg(28);
BENCHMARK(BM_CliqueCountParallel)->Arg(25)->Arg(28);

BENCHMARK_MAIN();
