#include "qinv/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "qinv/errors.hpp"

namespace qinv {

FusionLevel::FusionLevel(int k) : k_(k) {
  if (k < 1) throw RangeError("level k must be >= 1, got " + std::to_string(k));
}

void FusionLevel::check_label(int a) const {
  if (!valid_label(a)) {
    throw RangeError("label " + std::to_string(a) + " outside 0.." + std::to_string(k_));
  }
}

int FusionLevel::multiplicity(int a, int b, int c) const {
  check_label(a);
  check_label(b);
  check_label(c);
  const int lo = std::abs(a - b);
  const int hi = std::min(a + b, 2 * k_ - a - b);
  return (c >= lo && c <= hi && (a + b + c) % 2 == 0) ? 1 : 0;
}

std::vector<int> fuse(const FusionLevel& lv, int a, int b) {
  lv.check_label(a);
  lv.check_label(b);
  std::vector<int> out;
  const int hi = std::min(a + b, 2 * lv.k() - a - b);
  for (int c = std::abs(a - b); c <= hi; c += 2) out.push_back(c);
  return out;
}

std::vector<int> fusion_matrix(const FusionLevel& lv, int a) {
  const int n = lv.label_count();
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (int b = 0; b < n; ++b) {
    for (int c : fuse(lv, a, b)) m[static_cast<std::size_t>(b) * n + c] = 1;
  }
  return m;
}

std::uint64_t block_dim_sphere(const FusionLevel& lv, std::span<const int> marked) {
  if (marked.empty()) throw RangeError("block_dim_sphere needs at least one marked point");
  for (int a : marked) lv.check_label(a);
  const int n = lv.label_count();
  std::vector<std::uint64_t> paths(n, 0);
  paths[0] = 1;
  for (int a : marked) {
    std::vector<std::uint64_t> next(n, 0);
    for (int b = 0; b < n; ++b) {
      if (paths[b] == 0) continue;
      for (int c : fuse(lv, a, b)) next[c] += paths[b];
    }
    paths = std::move(next);
  }
  return paths[0];
}

SMatrix::SMatrix(const FusionLevel& lv) : n_(lv.label_count()) {
  const int h = lv.k() + 2;
  const double norm = std::sqrt(2.0 / h);
  entries_.resize(static_cast<std::size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      // Integer phase reduced mod 2h first: exact symmetry, small angles.
      const int phase = ((a + 1) * (b + 1)) % (2 * h);
      entries_[static_cast<std::size_t>(a) * n_ + b] = norm * std::sin(std::numbers::pi * phase / h);
    }
  }
}

SMatrix s_matrix(const FusionLevel& lv) { return SMatrix(lv); }

VerlindeValue verlinde_sum(const FusionLevel& lv, int genus, std::span<const int> marked) {
  if (genus < 0) throw RangeError("genus must be nonnegative");
  for (int a : marked) lv.check_label(a);
  const SMatrix s(lv);
  const int power = 2 - 2 * genus - static_cast<int>(marked.size());
  double total = 0.0;
  for (int a = 0; a < s.size(); ++a) {
    double term = std::pow(s(0, a), power);
    for (int lambda : marked) term *= s(lambda, a);
    total += term;
  }
  VerlindeValue v;
  v.raw = total;
  v.dim = std::llround(total);
  v.residual = std::abs(total - static_cast<double>(v.dim));
  return v;
}

std::int64_t verlinde_dim(const FusionLevel& lv, int genus, std::span<const int> marked) {
  const VerlindeValue v = verlinde_sum(lv, genus, marked);
  if (v.residual > kVerlindeTolerance) {
    throw NumericError("Verlinde sum " + std::to_string(v.raw) + " is not within " +
                       std::to_string(kVerlindeTolerance) + " of an integer");
  }
  return v.dim;
}

}  // namespace qinv
