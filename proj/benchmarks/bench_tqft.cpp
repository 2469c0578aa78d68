#include <benchmark/benchmark.h>

#include "qinv/tqft.hpp"

namespace {

void BM_ClosedSurfaceVerlinde(benchmark::State& state) {
  const qinv::FrobeniusAlgebra f = qinv::frobenius_from_fusion(qinv::FusionLevel(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qinv::closed_surface(f, 3));
}
BENCHMARK(BM_ClosedSurfaceVerlinde)->DenseRange(1, 6);

void BM_GluePair(benchmark::State& state) {
  using G = qinv::Generator;
  const qinv::FrobeniusAlgebra f = qinv::frobenius_from_fusion(qinv::FusionLevel(3));
  const qinv::Cobordism left(0, {{G::kCap}, {G::kCopants}, {G::kCopants, G::kIdentity}});
  const qinv::Cobordism right(3, {{G::kIdentity, G::kPants}, {G::kPants}, {G::kCup}});
  for (auto _ : state) benchmark::DoNotOptimize(qinv::glue_pair(f, left, right));
}
BENCHMARK(BM_GluePair);

void BM_ValidateFrobenius(benchmark::State& state) {
  const qinv::FrobeniusAlgebra f = qinv::frobenius_from_fusion(qinv::FusionLevel(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qinv::validate_frobenius(f));
}
BENCHMARK(BM_ValidateFrobenius)->DenseRange(2, 8, 3);

}  // namespace
