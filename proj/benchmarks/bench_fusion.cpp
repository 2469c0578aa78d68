#include <benchmark/benchmark.h>

#include <vector>

#include "qinv/fusion.hpp"

namespace {

void BM_BlockDimSphere(benchmark::State& state) {
  const qinv::FusionLevel lv(static_cast<int>(state.range(0)));
  const std::vector<int> marked(8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qinv::block_dim_sphere(lv, marked));
}
BENCHMARK(BM_BlockDimSphere)->RangeMultiplier(4)->Range(1, 64);

void BM_VerlindeSum(benchmark::State& state) {
  const qinv::FusionLevel lv(static_cast<int>(state.range(0)));
  const std::vector<int> marked(8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qinv::verlinde_sum(lv, 2, marked));
}
BENCHMARK(BM_VerlindeSum)->RangeMultiplier(4)->Range(1, 64);

void BM_SMatrix(benchmark::State& state) {
  const qinv::FusionLevel lv(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qinv::s_matrix(lv));
}
BENCHMARK(BM_SMatrix)->RangeMultiplier(4)->Range(1, 64);

}  // namespace
