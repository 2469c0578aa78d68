#include "gq_support.hpp"

namespace qtest {

using qinv::GaussianRational;
using qinv::Poly;
using qinv::Rational;

Poly random_poly(std::mt19937_64& g, int nvars, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms), coeff(-4, 4), exp_pick(0, max_degree);
  Poly p(nvars);
  const int n = terms(g);
  for (int t = 0; t < n; ++t) {
    Poly::Monomial m(static_cast<std::size_t>(nvars), 0);
    int budget = exp_pick(g);
    while (budget > 0) {
      ++m[std::uniform_int_distribution<int>(0, nvars - 1)(g)];
      --budget;
    }
    const int re = coeff(g);
    const int im = std::bernoulli_distribution(0.3)(g) ? coeff(g) : 0;
    const int h = std::bernoulli_distribution(0.2)(g) ? std::uniform_int_distribution<int>(-1, 1)(g) : 0;
    p.add_term(m, qinv::hbar_coeff(GaussianRational(Rational(re), Rational(im)), h));
  }
  return p;
}

}  // namespace qtest
