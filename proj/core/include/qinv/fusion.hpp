#pragma once

// SU(2) level-k fusion rules and the Verlinde formula.
//
// Labels are twice the spin: label a in 0..k stands for spin a/2. Label 0 is
// the fusion identity and every label is self-dual.

#include <cstdint>
#include <span>
#include <vector>

namespace qinv {

class FusionLevel {
 public:
  // Throws RangeError unless k >= 1.
  explicit FusionLevel(int k);

  int k() const { return k_; }
  int label_count() const { return k_ + 1; }
  bool valid_label(int a) const { return a >= 0 && a <= k_; }
  // Throws RangeError.
  void check_label(int a) const;

  // N_ab^c in {0, 1}.
  int multiplicity(int a, int b, int c) const;

 private:
  int k_;
};

// Quantum Clebsch-Gordan: c with |a-b| <= c <= min(a+b, 2k-a-b), c = a+b mod 2.
std::vector<int> fuse(const FusionLevel& lv, int a, int b);

// (k+1) x (k+1) fusion matrix (N_a)_{b,c} = N_ab^c, row-major.
std::vector<int> fusion_matrix(const FusionLevel& lv, int a);

// Fusion paths 0 -> lambda_1 -> ... -> lambda_n -> 0.
std::uint64_t block_dim_sphere(const FusionLevel& lv, std::span<const int> marked);

class SMatrix {
 public:
  explicit SMatrix(const FusionLevel& lv);

  int size() const { return n_; }
  double operator()(int a, int b) const { return entries_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  int n_;
  std::vector<double> entries_;
};

// S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1) / (k+2)).
SMatrix s_matrix(const FusionLevel& lv);

struct VerlindeValue {
  double raw = 0.0;       // sum before rounding
  std::int64_t dim = 0;   // nearest integer
  double residual = 0.0;  // |raw - dim|
};

inline constexpr double kVerlindeTolerance = 1e-6;

// sum_a S_0a^(2-2g-n) prod_i S_{lambda_i, a}, without the integrality check.
VerlindeValue verlinde_sum(const FusionLevel& lv, int genus, std::span<const int> marked);

// Rounded Verlinde dimension; throws NumericError when the residual exceeds
// kVerlindeTolerance.
std::int64_t verlinde_dim(const FusionLevel& lv, int genus, std::span<const int> marked);

}  // namespace qinv
