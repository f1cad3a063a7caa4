// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "classprod/sampling.hpp"

using namespace classprod;

namespace {

const std::vector<Angle>& mc_tuple() {
  static const std::vector<Angle> t{Angle(1, 2), Angle(1, 3), Angle(1, 4)};
  return t;
}

const std::vector<std::vector<Angle>>& batch() {
  static const std::vector<std::vector<Angle>> tuples = [] {
    std::mt19937_64 rng(11);
    std::vector<std::vector<Angle>> out;
    for (int i = 0; i < 4000; ++i) {
      const int n = std::uniform_int_distribution<int>(2, 10)(rng);
      std::vector<Angle> t;
      for (int k = 0; k < n; ++k) {
        const int den = std::uniform_int_distribution<int>(1, 24)(rng);
        t.emplace_back(std::uniform_int_distribution<int>(0, den)(rng), den);
      }
      out.push_back(std::move(t));
    }
    return out;
  }();
  return tuples;
}

void BM_EmpiricalReachable(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const std::int64_t samples = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(empirical_reachable(mc_tuple(), samples, 1, exec));
  state.SetItemsProcessed(state.iterations() * samples);
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}
BENCHMARK(BM_EmpiricalReachable)
    ->ArgsProduct({{static_cast<int>(Execution::serial), static_cast<int>(Execution::parallel)}, {100000, 1000000}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_ClassifyIdentity(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto route = static_cast<Route>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(classify_identity(batch(), route, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch().size()));
  state.SetLabel(std::string(exec == Execution::serial ? "serial" : "parallel") +
                 (route == Route::inequalities ? "/inequalities" : "/interval"));
}
BENCHMARK(BM_ClassifyIdentity)
    ->ArgsProduct({{static_cast<int>(Execution::serial), static_cast<int>(Execution::parallel)},
                   {static_cast<int>(Route::inequalities), static_cast<int>(Route::interval)}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_ClassifySurjective(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_surjective(batch(), Route::inequalities, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch().size()));
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}
BENCHMARK(BM_ClassifySurjective)
    ->Arg(static_cast<int>(Execution::serial))
    ->Arg(static_cast<int>(Execution::parallel))
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
