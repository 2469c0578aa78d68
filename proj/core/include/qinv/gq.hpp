#pragma once

// Symbolic prequantization of polynomial observables on R^{2n}.
//
// Phase-space coordinates are q1..qn, p1..pn with omega = sum_j dq_j ^ dp_j.
// Coefficients are Laurent polynomials in a formal, invertible hbar over Q(i).
// The prequantum line bundle is trivialized by the single global potential
// A = -sum_j p_j dq_j (dA = omega), which is all R^{2n} needs.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/laurent.hpp"

namespace qinv {

inline constexpr const char* kHbarVar = "hbar";
using HbarCoeff = GaussLaurent;

HbarCoeff hbar_coeff(const GaussianRational& c, int hbar_power = 0);

using VariableNames = std::vector<std::string>;

// q1..qn, p1..pn.
VariableNames phase_space_names(int n);
// x1..xn.
VariableNames position_names(int n);
// z1..zn, zb1..zbn.
VariableNames complex_names(int n);

// Polynomial in nvars commuting variables with HbarCoeff coefficients.
class Poly {
 public:
  using Monomial = std::vector<int>;
  using TermMap = std::map<Monomial, HbarCoeff>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const HbarCoeff& c);
  static Poly constant(int nvars, const GaussianRational& c) { return constant(nvars, hbar_coeff(c)); }
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Monomial& m, const HbarCoeff& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const HbarCoeff& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const HbarCoeff& c) { return a *= c; }
  friend Poly operator*(const HbarCoeff& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned n) const;
  Poly derivative(int var) const;

  std::string to_string(const VariableNames& names) const;

 private:
  void check_same(const Poly& o) const;

  int nvars_;
  TermMap terms_;
};

// Observables on R^{2n} carry nvars = 2n.
using PolyObservable = Poly;

int phase_dim(const PolyObservable& f);
PolyObservable coordinate_q(int n, int k);  // k is 1-based
PolyObservable coordinate_p(int n, int k);

// Components along d/dq_1..d/dq_n, d/dp_1..d/dp_n.
struct VectorFieldPoly {
  std::vector<Poly> components;

  Poly apply(const Poly& g) const;
  friend bool operator==(const VectorFieldPoly&, const VectorFieldPoly&) = default;
};

// X_H = sum_j (dH/dp_j d/dq_j - dH/dq_j d/dp_j).
VectorFieldPoly hamiltonian_vf(const PolyObservable& f);

// [X, Y]^i = X(Y^i) - Y(X^i).
VectorFieldPoly vf_commutator(const VectorFieldPoly& x, const VectorFieldPoly& y);

// {f, g} = X_f(g). Throws DimensionError.
PolyObservable poisson(const PolyObservable& f, const PolyObservable& g);

// Normal-ordered differential operator: sum of coefficient * d^alpha with all
// coefficients to the left of all derivatives.
class DiffOperator {
 public:
  using Multi = std::vector<int>;
  using TermMap = std::map<Multi, Poly>;

  explicit DiffOperator(int nvars = 0) : nvars_(nvars) {}

  static DiffOperator multiplication(const Poly& c);
  static DiffOperator derivation(int nvars, int var);
  static DiffOperator identity(int nvars);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Multi& alpha, const Poly& c);

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const HbarCoeff& c);

  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(DiffOperator a, const HbarCoeff& c) { return a *= c; }
  friend DiffOperator operator*(const HbarCoeff& c, DiffOperator a) { return a *= c; }
  // Composition a after b, normal-ordered by the Leibniz rule.
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

  Poly apply(const Poly& g) const;
  std::string to_string(const VariableNames& names) const;

 private:
  void check_same(const DiffOperator& o) const;

  int nvars_;
  TermMap terms_;
};

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

// Q_pre(f) = -i hbar X_f - A(X_f) - f with A = -sum p_j dq_j.
DiffOperator prequant(const PolyObservable& f);

// [Q(f), Q(g)] + i hbar Q({f, g}); identically zero.
DiffOperator dirac_residual(const PolyObservable& f, const PolyObservable& g);

enum class Canonical { kCoordinate, kMomentum };

// Q(q_k) = x_k, Q(p_k) = -i hbar d/dx_k on functions of x1..xn.
DiffOperator schrodinger_rep(int n, Canonical which, int k);

// Linear extension of schrodinger_rep to affine observables c + a.q + b.p.
// Throws ValidityError for anything of higher degree.
DiffOperator schrodinger_quantize(const PolyObservable& f);

// [Q(f), Q(g)] + i hbar Q({f, g}) in the Schrodinger representation.
DiffOperator schrodinger_dirac_residual(const PolyObservable& f, const PolyObservable& g);

struct PolarizationCheck {
  bool polarized = true;
  int index = -1;         // 1-based k of the first nonzero d/dzbar_k
  std::optional<Poly> witness;
};

// s is a polynomial in z1..zn, zb1..zbn (nvars = 2n).
PolarizationCheck is_polarized(const Poly& s);

// Recursive-descent parser: sums, products, '^' powers, parentheses, integer
// and rational literals, 'i', and 'hbar' (the only base allowed a negative
// exponent). Throws ParseError.
Poly parse_poly(std::string_view text, const VariableNames& names);

// Largest k appearing as q<k> or p<k> (at least 1).
int infer_phase_dim(std::string_view text);
// Largest k appearing as z<k> or zb<k> (at least 1).
int infer_complex_dim(std::string_view text);

}  // namespace qinv
