#include <benchmark/benchmark.h>

#include "qinv/gq.hpp"

namespace {

void BM_Poisson(benchmark::State& state) {
  const auto names = qinv::phase_space_names(2);
  const qinv::Poly f = qinv::parse_poly("(q1 + p2)^3 * q2 - p1^2", names);
  const qinv::Poly g = qinv::parse_poly("q1*p1*q2*p2 + p2^4", names);
  for (auto _ : state) benchmark::DoNotOptimize(qinv::poisson(f, g));
}
BENCHMARK(BM_Poisson);

void BM_DiracResidual(benchmark::State& state) {
  const auto names = qinv::phase_space_names(2);
  const qinv::Poly f = qinv::parse_poly("q1^2*p1 + 3*q2*p2^2", names);
  const qinv::Poly g = qinv::parse_poly("p1^3 - q1*q2*p2", names);
  for (auto _ : state) benchmark::DoNotOptimize(qinv::dirac_residual(f, g));
}
BENCHMARK(BM_DiracResidual);

void BM_OperatorProduct(benchmark::State& state) {
  const auto names = qinv::phase_space_names(1);
  const qinv::DiffOperator a = qinv::prequant(qinv::parse_poly("q1^3*p1^2", names));
  const qinv::DiffOperator b = qinv::prequant(qinv::parse_poly("p1^3 + q1^2", names));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_OperatorProduct);

}  // namespace
