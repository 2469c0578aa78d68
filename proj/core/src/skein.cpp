#include "qinv/skein.hpp"

#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "qinv/errors.hpp"

namespace qinv {

namespace {

IntLaurent a_monomial(int exponent, long coeff = 1) {
  return IntLaurent::monomial(kBracketVar, exponent, Integer(coeff));
}

IntLaurent s_monomial(int exponent, long coeff = 1) {
  return IntLaurent::monomial(kJonesVar, exponent, Integer(coeff));
}

std::complex<double> root_s(int level) {
  if (level < 1) throw RangeError("level k must be >= 1, got " + std::to_string(level));
  return std::polar(1.0, std::numbers::pi / (level + 2));
}

}  // namespace

bool JonesPolynomial::parity_consistent(int components) const {
  const int want = (components - 1) & 1;
  for (const auto& [e, c] : poly_.terms()) {
    if ((e & 1) != want) return false;
  }
  return true;
}

IntLaurent loop_value() { return a_monomial(2, -1) + a_monomial(-2, -1); }

IntLaurent kauffman_bracket(const LinkDiagram& d) {
  if (d.empty()) throw ValidityError("the empty diagram has no bracket");
  const IntLaurent delta = loop_value();
  const auto& crossings = d.crossings();
  const std::size_t c = crossings.size();
  if (c == 0) return delta.pow(static_cast<unsigned>(d.free_loops() - 1));
  if (c > 30) throw RangeError("state sum limited to 30 crossings");

  // Dense arc indices.
  std::map<int, std::uint16_t> index;
  for (const auto& x : crossings) {
    for (int a : x.arcs) index.try_emplace(a, static_cast<std::uint16_t>(index.size()));
  }
  std::vector<std::array<std::uint16_t, 4>> arcs(c);
  for (std::size_t i = 0; i < c; ++i) {
    for (int p = 0; p < 4; ++p) arcs[i][p] = index.at(crossings[i].arcs[p]);
  }
  const std::size_t n_arcs = index.size();

  // counts[a][loops]: number of states with `a` A-smoothings and `loops` circles.
  // States are walked depth first over the crossings with a union-find that
  // supports rollback (union by size, no path compression).
  std::vector<std::vector<std::uint64_t>> counts(c + 1, std::vector<std::uint64_t>(n_arcs + 1, 0));
  std::vector<std::uint16_t> parent(n_arcs), size(n_arcs, 1);
  for (std::size_t i = 0; i < n_arcs; ++i) parent[i] = static_cast<std::uint16_t>(i);
  std::vector<std::uint16_t> undo;  // roots that were attached, in order
  undo.reserve(2 * c);
  std::size_t loops = n_arcs;
  auto find = [&](std::uint16_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto unite = [&](std::uint16_t x, std::uint16_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size[x] > size[y]) std::swap(x, y);
    parent[x] = y;
    size[y] = static_cast<std::uint16_t>(size[y] + size[x]);
    undo.push_back(x);
    --loops;
    return true;
  };
  auto rollback = [&](int n) {
    for (; n > 0; --n) {
      const std::uint16_t x = undo.back();
      undo.pop_back();
      const std::uint16_t y = parent[x];
      size[y] = static_cast<std::uint16_t>(size[y] - size[x]);
      parent[x] = x;
      ++loops;
    }
  };
  auto walk = [&](auto&& self, std::size_t i, std::size_t a_count) -> void {
    if (i == c) {
      ++counts[a_count][loops];
      return;
    }
    const auto& x = arcs[i];
    // A-smoothing joins (i,l) and (j,k); at a positive crossing it is the oriented one.
    int n = unite(x[0], x[3]) + unite(x[1], x[2]);
    self(self, i + 1, a_count + 1);
    rollback(n);
    // B-smoothing joins (i,j) and (k,l).
    n = unite(x[0], x[1]) + unite(x[2], x[3]);
    self(self, i + 1, a_count);
    rollback(n);
  };
  walk(walk, 0, 0);

  // A state with `a` A-smoothings and m + 1 circles (free loops included)
  // contributes A^(2a - c) delta^m, and delta^m = (-1)^m sum_j C(m,j) A^(2m - 4j).
  const std::size_t max_m = n_arcs + static_cast<std::size_t>(d.free_loops()) - 1;
  const int lowest = -static_cast<int>(c) - 2 * static_cast<int>(max_m);
  std::vector<Integer> dense(static_cast<std::size_t>(2 * c + 4 * max_m + 1));
  Integer binom, term;
  for (std::size_t a = 0; a <= c; ++a) {
    const int base = static_cast<int>(2 * a) - static_cast<int>(c);
    for (std::size_t loops = 1; loops <= n_arcs; ++loops) {
      if (counts[a][loops] == 0) continue;
      const std::size_t m = loops + static_cast<std::size_t>(d.free_loops()) - 1;
      for (std::size_t j = 0; j <= m; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), m, j);
        mpz_mul_ui(term.get_mpz_t(), binom.get_mpz_t(), counts[a][loops]);
        Integer& slot = dense[static_cast<std::size_t>(base + 2 * static_cast<int>(m) - 4 * static_cast<int>(j) - lowest)];
        if (m % 2 == 0) {
          slot += term;
        } else {
          slot -= term;
        }
      }
    }
  }
  IntLaurent bracket(kBracketVar);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) bracket.add_term(static_cast<int>(i) + lowest, dense[i]);
  }
  return bracket;
}

JonesPolynomial jones(const LinkDiagram& d) {
  const int w = writhe(d);
  // (-A)^(-3w) = (-1)^w A^(-3w).
  const IntLaurent framing = a_monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  return JonesPolynomial((framing * kauffman_bracket(d)).reindex_even(kJonesVar));
}

SkeinTriple skein_triple(const LinkDiagram& d, std::size_t crossing_index) {
  const int s = d.sign(crossing_index);
  LinkDiagram switched = crossing_switch(d, crossing_index);
  LinkDiagram smoothed = crossing_smooth(d, crossing_index);
  if (s > 0) return {d, std::move(switched), std::move(smoothed)};
  return {std::move(switched), d, std::move(smoothed)};
}

namespace {

IntLaurent residual_of(const IntLaurent& plus, const IntLaurent& minus, const IntLaurent& zero) {
  const IntLaurent half = s_monomial(1) - s_monomial(-1);
  return s_monomial(-2) * plus - s_monomial(2) * minus - half * zero;
}

}  // namespace

IntLaurent skein_residual(const LinkDiagram& d, std::size_t crossing_index) {
  const SkeinTriple t = skein_triple(d, crossing_index);
  return residual_of(jones(t.plus).poly(), jones(t.minus).poly(), jones(t.zero).poly());
}

IntLaurent skein_residual(const LinkDiagram& d, std::size_t crossing_index, JonesCache& cache) {
  const SkeinTriple t = skein_triple(d, crossing_index);
  // Copies: later cache insertions may rehash.
  IntLaurent plus = cache.get(t.plus).poly();
  IntLaurent minus = cache.get(t.minus).poly();
  IntLaurent zero = cache.get(t.zero).poly();
  return residual_of(plus, minus, zero);
}

std::complex<double> jones_at_level(const JonesPolynomial& v, int level) {
  root_s(level);
  return v.poly().eval_root_of_unity(1, 2 * (static_cast<std::int64_t>(level) + 2));
}

std::complex<double> jones_at_level(const LinkDiagram& d, int level) {
  return jones_at_level(jones(d), level);
}

std::vector<std::complex<double>> skein_residual_at_levels(const LinkDiagram& d, std::size_t crossing_index,
                                                           std::span<const int> levels, JonesCache& cache) {
  for (int level : levels) root_s(level);
  const SkeinTriple t = skein_triple(d, crossing_index);
  // Copies: later cache insertions may rehash.
  const JonesPolynomial plus = cache.get(t.plus);
  const JonesPolynomial minus = cache.get(t.minus);
  const JonesPolynomial zero = cache.get(t.zero);
  std::vector<std::complex<double>> out;
  out.reserve(levels.size());
  for (int level : levels) {
    const std::complex<double> s = root_s(level);
    const std::complex<double> q = s * s;
    out.push_back(jones_at_level(plus, level) / q - q * jones_at_level(minus, level) -
                  (s - 1.0 / s) * jones_at_level(zero, level));
  }
  return out;
}

std::complex<double> skein_residual_at_level(const LinkDiagram& d, std::size_t crossing_index,
                                             int level, JonesCache& cache) {
  const int levels[] = {level};
  return skein_residual_at_levels(d, crossing_index, levels, cache).front();
}

const JonesPolynomial& JonesCache::get(const LinkDiagram& d) {
  std::string key = d.key();
  auto it = table_.find(key);
  if (it == table_.end()) it = table_.emplace(std::move(key), jones(d)).first;
  return it->second;
}

}  // namespace qinv
