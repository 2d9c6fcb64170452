#include <benchmark/benchmark.h>

#include "sfmlab/cut_dimension.hpp"
#include "sfmlab/permutation_family.hpp"
#include "sfmlab/random_instances.hpp"
#include "sfmlab/set_function_checks.hpp"
#include "sfmlab/sfm_solvers.hpp"

namespace sfmlab {
namespace {

void BM_CheckSubmodularChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const PermutationInstance p = random_permutation_instance(n, rng);
  const SetFunction f = p.as_function();
  for (auto _ : state) benchmark::DoNotOptimize(check_submodular(f, n));
}
BENCHMARK(BM_CheckSubmodularChain)->DenseRange(4, 10, 2);

void BM_StarMatchingCutDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [sys, w] = cut_system_from_graph(build_star_matching_graph(n));
  for (auto _ : state) benchmark::DoNotOptimize(cut_dimension(sys, w, true).d);
}
BENCHMARK(BM_StarMatchingCutDimension)->DenseRange(5, 13, 4);

void BM_Queyranne(benchmark::State& state) {
  const int vertices = static_cast<int>(state.range(0));
  Rng rng(2);
  const WeightedGraph g = random_graph(vertices, CutMode::kUndirected, rng);
  for (auto _ : state) {
    ValueOracle oracle(vertices, [&g](const Subset& s) { return g.cut_value(s); });
    benchmark::DoNotOptimize(queyranne_minimize(oracle).min_value);
  }
}
BENCHMARK(BM_Queyranne)->RangeMultiplier(2)->Range(4, 16);

void BM_BruteForceNontrivial(benchmark::State& state) {
  const int vertices = static_cast<int>(state.range(0));
  Rng rng(3);
  const WeightedGraph g = random_graph(vertices, CutMode::kUndirected, rng);
  for (auto _ : state) {
    ValueOracle oracle(vertices, [&g](const Subset& s) { return g.cut_value(s); });
    benchmark::DoNotOptimize(brute_force_sfm(oracle, true).min_value);
  }
}
BENCHMARK(BM_BruteForceNontrivial)->DenseRange(4, 12, 4);

}  // namespace
}  // namespace sfmlab

BENCHMARK_MAIN();
