#include <benchmark/benchmark.h>

#include "vstoch/construct.hpp"
#include "vstoch/core_ops.hpp"
#include "vstoch/sample.hpp"
#include "vstoch/search.hpp"

using namespace vstoch;

namespace {

void BM_SolveCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<double> xi(n);
  for (double& v : xi) v = rng.uniform(0.5, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cyclic(xi));
}
BENCHMARK(BM_SolveCyclic)->Arg(9)->Arg(33)->Arg(99);

void BM_ConstructNminus1Weighted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Bistochastic p = Bistochastic::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(construct_nminus1(p, ConstructMode::weighted));
}
BENCHMARK(BM_ConstructNminus1Weighted)->Arg(3)->Arg(7)->Arg(15);

void BM_ConstructFullQuaternion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Bistochastic p = sample_sinkhorn(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(construct_full(p, Field::H, n));
}
BENCHMARK(BM_ConstructFullQuaternion)->Arg(4)->Arg(8);

void BM_CheckIsometry(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AnyVectorMatrix v = sample_isometry(Field::H, n, 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(check_isometry(v));
}
BENCHMARK(BM_CheckIsometry)->Arg(4)->Arg(8);

void BM_Sinkhorn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_sinkhorn(n, ++seed));
}
BENCHMARK(BM_Sinkhorn)->Arg(3)->Arg(8);

void BM_SearchPlantedComplex(benchmark::State& state) {
  // membership search on the flat 3x3 matrix over C (d = 1 certificate exists)
  Bistochastic p = Bistochastic::uniform(3);
  SearchConfig cfg;
  cfg.field = Field::C;
  cfg.n = 3;
  cfg.d = 1;
  cfg.seed = 5;
  for (auto _ : state) benchmark::DoNotOptimize(search_fixed_d(p, cfg));
}
BENCHMARK(BM_SearchPlantedComplex);

}  // namespace

BENCHMARK_MAIN();
