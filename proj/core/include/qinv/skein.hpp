#pragma once

// Kauffman bracket, Jones polynomial and the oriented skein relation
//
//   q^-1 V(L+) - q V(L-) - (q^1/2 - q^-1/2) V(L0) = 0,   q = s^2.
//
// The bracket lives in Z[A, A^-1]; the Jones polynomial lives in Z[s, s^-1]
// with s = A^-2 (so q = t = A^-4 in the classical normalization).

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qinv/diagram.hpp"
#include "qinv/laurent.hpp"

namespace qinv {

inline constexpr const char* kBracketVar = "A";
inline constexpr const char* kJonesVar = "s";

// Jones polynomial in s = q^1/2, normalized to V(unknot) = 1.
class JonesPolynomial {
 public:
  JonesPolynomial() = default;
  explicit JonesPolynomial(IntLaurent poly) : poly_(std::move(poly)) {}

  const IntLaurent& poly() const { return poly_; }
  static constexpr const char* normalization() { return "unknot=1"; }

  // All exponents share the parity of components - 1 (even for knots).
  bool parity_consistent(int components) const;

  friend bool operator==(const JonesPolynomial&, const JonesPolynomial&) = default;

 private:
  IntLaurent poly_;
};

// Loop value -A^2 - A^-2.
IntLaurent loop_value();

// State sum over all 2^c smoothings; <unknot> = 1. Throws ValidityError on the
// empty diagram.
IntLaurent kauffman_bracket(const LinkDiagram& d);

// (-A)^(-3 writhe) <d>, reindexed to s = A^-2.
JonesPolynomial jones(const LinkDiagram& d);

// s^-2 V(L+) - s^2 V(L-) - (s - s^-1) V(L0) for the triple built at one
// crossing. If that crossing is negative the diagram plays L-.
IntLaurent skein_residual(const LinkDiagram& d, std::size_t crossing_index);

// V evaluated at s = exp(pi i / (k + 2)), i.e. q = exp(2 pi i / (k + 2)).
std::complex<double> jones_at_level(const LinkDiagram& d, int level);
std::complex<double> jones_at_level(const JonesPolynomial& v, int level);

// Memoizes Jones polynomials by LinkDiagram::key(). Not thread-safe.
class JonesCache {
 public:
  const JonesPolynomial& get(const LinkDiagram& d);
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, JonesPolynomial> table_;
};

struct SkeinTriple {
  LinkDiagram plus;
  LinkDiagram minus;
  LinkDiagram zero;
};

SkeinTriple skein_triple(const LinkDiagram& d, std::size_t crossing_index);

IntLaurent skein_residual(const LinkDiagram& d, std::size_t crossing_index, JonesCache& cache);

// Numeric residual with every Jones polynomial evaluated at q = exp(2 pi i/(k+2)) first.
std::complex<double> skein_residual_at_level(const LinkDiagram& d, std::size_t crossing_index,
                                             int level, JonesCache& cache);
// Same, for several levels; the skein triple is built once.
std::vector<std::complex<double>> skein_residual_at_levels(const LinkDiagram& d, std::size_t crossing_index,
                                                           std::span<const int> levels, JonesCache& cache);

}  // namespace qinv
