#include "tqft_support.hpp"

namespace qtest {

using qinv::Cobordism;
using qinv::FrobeniusAlgebra;
using qinv::Generator;
using qinv::QMatrix;
using qinv::Rational;

Cobordism::Layer random_layer(std::mt19937_64& g, int in) {
  Cobordism::Layer layer;
  int remaining = in;
  int out = 0;
  std::uniform_int_distribution<int> pick(0, 5);
  while (remaining > 0) {
    const Generator gen = static_cast<Generator>(pick(g));
    const int s = qinv::source_arity(gen);
    const int t = qinv::target_arity(gen);
    if (s > remaining) continue;
    if (out + t + (remaining - s) > kMaxCircles) continue;
    layer.push_back(gen);
    remaining -= s;
    out += t;
  }
  if (out < kMaxCircles && std::bernoulli_distribution(in == 0 ? 0.8 : 0.2)(g)) {
    const auto pos = std::uniform_int_distribution<std::size_t>(0, layer.size())(g);
    layer.insert(layer.begin() + static_cast<long>(pos), Generator::kCap);
  }
  return layer;
}

Cobordism random_cobordism(std::mt19937_64& g, int source) {
  const int depth = std::uniform_int_distribution<int>(0, 4)(g);
  std::vector<Cobordism::Layer> layers;
  int circles = source;
  for (int i = 0; i < depth; ++i) {
    layers.push_back(random_layer(g, circles));
    circles = 0;
    for (Generator gen : layers.back()) circles += qinv::target_arity(gen);
  }
  return Cobordism(source, std::move(layers));
}

std::vector<FrobeniusAlgebra> algebras() {
  std::vector<FrobeniusAlgebra> out{qinv::z2_group_algebra()};
  for (int k = 1; k <= 3; ++k) out.push_back(qinv::frobenius_from_fusion(qinv::FusionLevel(k)));
  return out;
}

Rational handle_oracle(const FrobeniusAlgebra& f, int genus) {
  const int d = f.dim();
  const QMatrix pinv = f.pairing().inverse();
  auto times = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> z(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (x[i] == 0 || y[j] == 0) continue;
        for (int k = 0; k < d; ++k) z[k] += x[i] * y[j] * f.mult(i, j, k);
      }
    }
    return z;
  };
  std::vector<Rational> handle(d);
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> ei(d), dual(d);
    ei[i] = 1;
    for (int j = 0; j < d; ++j) dual[j] = pinv(i, j);
    const auto prod = times(ei, dual);
    for (int k = 0; k < d; ++k) handle[k] += prod[k];
  }
  std::vector<Rational> acc = f.unit();
  for (int t = 0; t < genus; ++t) acc = times(acc, handle);
  Rational z;
  const auto eps = f.counit();
  for (int k = 0; k < d; ++k) z += eps[k] * acc[k];
  return z;
}

}  // namespace qtest
