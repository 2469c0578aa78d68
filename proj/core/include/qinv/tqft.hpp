#pragma once

// Two-dimensional TQFTs from commutative Frobenius algebras.
//
// A cobordism between disjoint unions of circles is a word of layers; each
// layer places generators side by side. Evaluation sends n circles to the
// n-fold tensor power of the algebra (first circle = most significant index)
// and composes layer matrices exactly over Q.

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qinv/coeff.hpp"
#include "qinv/fusion.hpp"

namespace qinv {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transpose() const;
  // Throws std::domain_error when singular.
  QMatrix inverse() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Kronecker product a (x) b.
QMatrix kron(const QMatrix& a, const QMatrix& b);
QMatrix kron_power(const QMatrix& a, int n);

using StateSpaceMap = QMatrix;

class FrobeniusAlgebra {
 public:
  // mult[(i*d + j)*d + k] is the e_k coefficient of e_i e_j.
  FrobeniusAlgebra(int dim, std::vector<Rational> mult, std::vector<Rational> unit, QMatrix pairing);

  int dim() const { return dim_; }
  const Rational& mult(int i, int j, int k) const {
    return mult_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  Rational& mult(int i, int j, int k) {
    return mult_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& unit() const { return unit_; }
  const QMatrix& pairing() const { return pairing_; }

  // eps(e_i) = sum_j pairing[i][j] unit_j.
  std::vector<Rational> counit() const;

  // Generator matrices.
  QMatrix unit_matrix() const;    // d x 1
  QMatrix counit_matrix() const;  // 1 x d
  QMatrix mult_matrix() const;    // d x d^2
  // Delta(a) = sum_j a e_j (x) e^j with e^j dual to e_j under the pairing.
  // Throws std::domain_error when the pairing is singular.
  QMatrix comult_matrix() const;

 private:
  int dim_;
  std::vector<Rational> mult_;
  std::vector<Rational> unit_;
  QMatrix pairing_;
};

struct FrobeniusReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks associativity, commutativity, the unit law, symmetry and
// invertibility of the pairing, and <ab, c> = <a, bc> on basis triples.
FrobeniusReport validate_frobenius(const FrobeniusAlgebra& f);

// Group algebra of Z/2 with eps(e) = 1, eps(g) = 0, <a,b> = eps(ab).
FrobeniusAlgebra z2_group_algebra();

// Verlinde (fusion) algebra at level k: basis = labels, structure constants
// from fuse, unit = label 0, pairing delta_ab.
FrobeniusAlgebra frobenius_from_fusion(const FusionLevel& lv);

enum class Generator { kIdentity, kSwap, kCap, kCup, kPants, kCopants };

int source_arity(Generator g);
int target_arity(Generator g);
std::string to_string(Generator g);
// Accepts "id"/"identity", "swap", "cap", "cup", "pants", "copants".
Generator parse_generator(const std::string& name);

class Cobordism {
 public:
  using Layer = std::vector<Generator>;

  // Throws CompositionError when consecutive layers disagree on circle counts.
  Cobordism(int source, std::vector<Layer> layers);

  static Cobordism identity(int circles) { return Cobordism(circles, {}); }

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<Layer>& layers() const { return layers_; }

  // Word read backwards with cap<->cup and pants<->copants.
  Cobordism reversed() const;

  friend bool operator==(const Cobordism&, const Cobordism&) = default;

 private:
  int source_;
  int target_;
  std::vector<Layer> layers_;
};

// first, then second. Throws CompositionError on mismatched interfaces.
Cobordism compose(const Cobordism& first, const Cobordism& second);
// Disjoint union; the shorter word is padded with identity layers.
Cobordism parallel(const Cobordism& top, const Cobordism& bottom);

// cap, g handle blocks (copants then pants), cup.
Cobordism closed_surface_word(int genus);

StateSpaceMap evaluate(const FrobeniusAlgebra& f, const Cobordism& c);

// Contracts evaluate(left) against the reversed right piece through the
// pairing on the shared circles; equals evaluate(compose(left, right)).
StateSpaceMap glue_pair(const FrobeniusAlgebra& f, const Cobordism& left, const Cobordism& right);

Rational closed_surface(const FrobeniusAlgebra& f, int genus);

// {"dim": d, "mult": [[[...]]], "unit": [...], "pairing": [[...]]}, entries
// as rational strings or integers.
FrobeniusAlgebra frobenius_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FrobeniusAlgebra& f);

// ["cap", ["copants"], ["pants"], "cup"] or {"source": m, "word": [...]}.
Cobordism cobordism_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Cobordism& c);

}  // namespace qinv
