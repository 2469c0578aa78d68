#include <benchmark/benchmark.h>

#include <string>

#include "qinv/skein.hpp"

namespace {

// Closure of s1 s2^-1 s1 s2^-1 ... on three strands.
qinv::LinkDiagram three_strand(int letters) {
  qinv::BraidWord b;
  b.strands = 3;
  for (int i = 0; i < letters; ++i) b.letters.push_back(i % 2 == 0 ? 1 : -2);
  return qinv::braid_closure(b);
}

void BM_KauffmanBracket(benchmark::State& state) {
  const qinv::LinkDiagram d = three_strand(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qinv::kauffman_bracket(d));
}
BENCHMARK(BM_KauffmanBracket)->DenseRange(4, 16, 4);

void BM_Jones(benchmark::State& state) {
  const qinv::LinkDiagram d = three_strand(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qinv::jones(d));
}
BENCHMARK(BM_Jones)->DenseRange(4, 16, 4);

void BM_ParsePd(benchmark::State& state) {
  const std::string pd = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
  for (auto _ : state) benchmark::DoNotOptimize(qinv::parse_pd(pd));
}
BENCHMARK(BM_ParsePd);

void BM_SkeinResidualCached(benchmark::State& state) {
  const qinv::LinkDiagram d = three_strand(8);
  qinv::JonesCache cache;
  for (auto _ : state) {
    for (std::size_t i = 0; i < d.crossing_count(); ++i) benchmark::DoNotOptimize(qinv::skein_residual(d, i, cache));
  }
}
BENCHMARK(BM_SkeinResidualCached);

void BM_SkeinTriple(benchmark::State& state) {
  const qinv::LinkDiagram d = three_strand(8);
  for (auto _ : state) benchmark::DoNotOptimize(qinv::skein_triple(d, 3));
}
BENCHMARK(BM_SkeinTriple);

}  // namespace
