#include "qinv/tqft.hpp"

#include <algorithm>
#include <stdexcept>

#include "qinv/errors.hpp"

namespace qinv {

// ---------------------------------------------------------------- QMatrix

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix a = *this;
  QMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw CompositionError("matrix shapes do not compose");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Rational& y = b(k, c);
        if (sgn(y) != 0) out(r, c) += x * y;
      }
    }
  }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw CompositionError("matrix shapes differ");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw CompositionError("matrix shapes differ");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::string QMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += (*this)(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

nlohmann::json QMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) row.push_back((*this)(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Rational& x = a(ar, ac);
      if (sgn(x) == 0) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          if (sgn(b(br, bc)) != 0) out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

QMatrix kron_power(const QMatrix& a, int n) {
  QMatrix out = QMatrix::identity(1);
  for (int i = 0; i < n; ++i) out = kron(out, a);
  return out;
}

// ------------------------------------------------------- FrobeniusAlgebra

FrobeniusAlgebra::FrobeniusAlgebra(int dim, std::vector<Rational> mult, std::vector<Rational> unit,
                                   QMatrix pairing)
    : dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), pairing_(std::move(pairing)) {
  const auto d = static_cast<std::size_t>(dim);
  if (dim < 1) throw ValidityError("Frobenius algebra needs dim >= 1");
  if (mult_.size() != d * d * d) throw ValidityError("mult tensor must have dim^3 entries");
  if (unit_.size() != d) throw ValidityError("unit must have dim entries");
  if (pairing_.rows() != d || pairing_.cols() != d) throw ValidityError("pairing must be dim x dim");
}

std::vector<Rational> FrobeniusAlgebra::counit() const {
  std::vector<Rational> eps(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) eps[i] += pairing_(i, j) * unit_[j];
  }
  return eps;
}

QMatrix FrobeniusAlgebra::unit_matrix() const {
  QMatrix m(dim_, 1);
  for (int i = 0; i < dim_; ++i) m(i, 0) = unit_[i];
  return m;
}

QMatrix FrobeniusAlgebra::counit_matrix() const {
  const auto eps = counit();
  QMatrix m(1, dim_);
  for (int i = 0; i < dim_; ++i) m(0, i) = eps[i];
  return m;
}

QMatrix FrobeniusAlgebra::mult_matrix() const {
  const auto d = static_cast<std::size_t>(dim_);
  QMatrix m(d, d * d);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) m(k, i * d + j) = mult(i, j, k);
    }
  }
  return m;
}

QMatrix FrobeniusAlgebra::comult_matrix() const {
  const auto d = static_cast<std::size_t>(dim_);
  const QMatrix inv = pairing_.inverse();
  QMatrix m(d * d, d);
  for (int k = 0; k < dim_; ++k) {
    for (int a = 0; a < dim_; ++a) {
      for (int l = 0; l < dim_; ++l) {
        Rational entry;
        for (int j = 0; j < dim_; ++j) entry += mult(k, j, a) * inv(l, j);
        m(a * d + l, k) = entry;
      }
    }
  }
  return m;
}

FrobeniusReport validate_frobenius(const FrobeniusAlgebra& f) {
  FrobeniusReport report;
  const int d = f.dim();
  auto idx = [](int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  };

  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (f.mult(i, j, k) != f.mult(j, i, k)) {
          report.violations.push_back("commutativity fails at " + idx(i, j, k));
        }
        for (int r = 0; r < d; ++r) {
          Rational left;   // ((e_i e_j) e_k)_r
          Rational right;  // (e_i (e_j e_k))_r
          for (int s = 0; s < d; ++s) {
            left += f.mult(i, j, s) * f.mult(s, k, r);
            right += f.mult(j, k, s) * f.mult(i, s, r);
          }
          if (left != right) {
            report.violations.push_back("associativity fails at " + idx(i, j, k) + " component " +
                                        std::to_string(r));
          }
        }
      }
    }
  }

  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      Rational v;
      for (int u = 0; u < d; ++u) v += f.unit()[u] * f.mult(u, i, k);
      if (v != (i == k ? 1 : 0)) {
        report.violations.push_back("unit law fails for e_" + std::to_string(i) + " component " +
                                    std::to_string(k));
      }
    }
  }

  const QMatrix& p = f.pairing();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (p(i, j) != p(j, i)) {
        report.violations.push_back("pairing not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
  try {
    (void)p.inverse();
  } catch (const std::domain_error&) {
    report.violations.push_back("pairing is degenerate");
  }

  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        Rational left;   // <e_i e_j, e_k>
        Rational right;  // <e_i, e_j e_k>
        for (int s = 0; s < d; ++s) {
          left += f.mult(i, j, s) * p(s, k);
          right += f.mult(j, k, s) * p(i, s);
        }
        if (left != right) report.violations.push_back("Frobenius compatibility fails at " + idx(i, j, k));
      }
    }
  }
  return report;
}

FrobeniusAlgebra z2_group_algebra() {
  // Basis e (0), g (1).
  std::vector<Rational> mult(8);
  auto at = [&](int i, int j, int k) -> Rational& { return mult[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = 1;
  at(0, 1, 1) = 1;
  at(1, 0, 1) = 1;
  at(1, 1, 0) = 1;
  QMatrix pairing = QMatrix::identity(2);
  return FrobeniusAlgebra(2, std::move(mult), {Rational(1), Rational(0)}, std::move(pairing));
}

FrobeniusAlgebra frobenius_from_fusion(const FusionLevel& lv) {
  const int d = lv.label_count();
  std::vector<Rational> mult(static_cast<std::size_t>(d) * d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c : fuse(lv, a, b)) mult[(static_cast<std::size_t>(a) * d + b) * d + c] = 1;
    }
  }
  std::vector<Rational> unit(d);
  unit[0] = 1;
  return FrobeniusAlgebra(d, std::move(mult), std::move(unit), QMatrix::identity(d));
}

// -------------------------------------------------------------- Cobordism

int source_arity(Generator g) {
  switch (g) {
    case Generator::kIdentity: return 1;
    case Generator::kSwap: return 2;
    case Generator::kCap: return 0;
    case Generator::kCup: return 1;
    case Generator::kPants: return 2;
    case Generator::kCopants: return 1;
  }
  return 0;
}

int target_arity(Generator g) {
  switch (g) {
    case Generator::kIdentity: return 1;
    case Generator::kSwap: return 2;
    case Generator::kCap: return 1;
    case Generator::kCup: return 0;
    case Generator::kPants: return 1;
    case Generator::kCopants: return 2;
  }
  return 0;
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::kIdentity: return "id";
    case Generator::kSwap: return "swap";
    case Generator::kCap: return "cap";
    case Generator::kCup: return "cup";
    case Generator::kPants: return "pants";
    case Generator::kCopants: return "copants";
  }
  return "?";
}

Generator parse_generator(const std::string& name) {
  if (name == "id" || name == "identity") return Generator::kIdentity;
  if (name == "swap") return Generator::kSwap;
  if (name == "cap") return Generator::kCap;
  if (name == "cup") return Generator::kCup;
  if (name == "pants") return Generator::kPants;
  if (name == "copants") return Generator::kCopants;
  throw ParseError("unknown cobordism generator '" + name + "'");
}

namespace {

Generator reverse_of(Generator g) {
  switch (g) {
    case Generator::kCap: return Generator::kCup;
    case Generator::kCup: return Generator::kCap;
    case Generator::kPants: return Generator::kCopants;
    case Generator::kCopants: return Generator::kPants;
    default: return g;
  }
}

int layer_source(const Cobordism::Layer& layer) {
  int n = 0;
  for (Generator g : layer) n += source_arity(g);
  return n;
}

int layer_target(const Cobordism::Layer& layer) {
  int n = 0;
  for (Generator g : layer) n += target_arity(g);
  return n;
}

}  // namespace

Cobordism::Cobordism(int source, std::vector<Layer> layers)
    : source_(source), target_(source), layers_(std::move(layers)) {
  if (source < 0) throw CompositionError("negative circle count");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const int in = layer_source(layers_[i]);
    if (in != target_) {
      throw CompositionError("layer " + std::to_string(i) + " consumes " + std::to_string(in) +
                             " circles but " + std::to_string(target_) + " are present");
    }
    target_ = layer_target(layers_[i]);
  }
}

Cobordism Cobordism::reversed() const {
  std::vector<Layer> layers;
  layers.reserve(layers_.size());
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    Layer layer;
    for (Generator g : *it) layer.push_back(reverse_of(g));
    layers.push_back(std::move(layer));
  }
  return Cobordism(target_, std::move(layers));
}

Cobordism compose(const Cobordism& first, const Cobordism& second) {
  if (first.target() != second.source()) {
    throw CompositionError("cannot glue " + std::to_string(first.target()) + " outgoing circles to " +
                           std::to_string(second.source()) + " incoming circles");
  }
  std::vector<Cobordism::Layer> layers = first.layers();
  layers.insert(layers.end(), second.layers().begin(), second.layers().end());
  return Cobordism(first.source(), std::move(layers));
}

Cobordism parallel(const Cobordism& top, const Cobordism& bottom) {
  const std::size_t depth = std::max(top.layers().size(), bottom.layers().size());
  auto padded = [depth](const Cobordism& c, std::size_t i) {
    if (i < c.layers().size()) return c.layers()[i];
    return Cobordism::Layer(static_cast<std::size_t>(c.target()), Generator::kIdentity);
  };
  std::vector<Cobordism::Layer> layers;
  layers.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    Cobordism::Layer layer = padded(top, i);
    const Cobordism::Layer lower = padded(bottom, i);
    layer.insert(layer.end(), lower.begin(), lower.end());
    layers.push_back(std::move(layer));
  }
  return Cobordism(top.source() + bottom.source(), std::move(layers));
}

Cobordism closed_surface_word(int genus) {
  if (genus < 0) throw RangeError("genus must be nonnegative");
  std::vector<Cobordism::Layer> layers{{Generator::kCap}};
  for (int g = 0; g < genus; ++g) {
    layers.push_back({Generator::kCopants});
    layers.push_back({Generator::kPants});
  }
  layers.push_back({Generator::kCup});
  return Cobordism(0, std::move(layers));
}

// -------------------------------------------------------------- Evaluation

namespace {

struct GeneratorMatrices {
  explicit GeneratorMatrices(const FrobeniusAlgebra& f)
      : id(QMatrix::identity(f.dim())),
        swap(static_cast<std::size_t>(f.dim()) * f.dim(), static_cast<std::size_t>(f.dim()) * f.dim()),
        cap(f.unit_matrix()),
        cup(f.counit_matrix()),
        pants(f.mult_matrix()),
        copants(f.comult_matrix()) {
    const auto d = static_cast<std::size_t>(f.dim());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) swap(j * d + i, i * d + j) = 1;
    }
  }

  const QMatrix& of(Generator g) const {
    switch (g) {
      case Generator::kIdentity: return id;
      case Generator::kSwap: return swap;
      case Generator::kCap: return cap;
      case Generator::kCup: return cup;
      case Generator::kPants: return pants;
      case Generator::kCopants: return copants;
    }
    return id;
  }

  QMatrix id, swap, cap, cup, pants, copants;
};

std::size_t power(int base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

}  // namespace

StateSpaceMap evaluate(const FrobeniusAlgebra& f, const Cobordism& c) {
  const GeneratorMatrices gens(f);
  QMatrix result = QMatrix::identity(power(f.dim(), c.source()));
  for (const auto& layer : c.layers()) {
    QMatrix step = QMatrix::identity(1);
    for (Generator g : layer) step = kron(step, gens.of(g));
    result = step * result;
  }
  return result;
}

StateSpaceMap glue_pair(const FrobeniusAlgebra& f, const Cobordism& left, const Cobordism& right) {
  if (left.target() != right.source()) {
    throw CompositionError("glue interface mismatch: left ends on " + std::to_string(left.target()) +
                           " circles, right begins on " + std::to_string(right.source()));
  }
  const QMatrix inner = kron_power(f.pairing(), left.target());
  const QMatrix lower = kron_power(f.pairing().inverse(), right.target());
  const QMatrix z_left = evaluate(f, left);
  const QMatrix z_right_bar = evaluate(f, right.reversed());
  return lower * (z_right_bar.transpose() * (inner * z_left));
}

Rational closed_surface(const FrobeniusAlgebra& f, int genus) {
  return evaluate(f, closed_surface_word(genus))(0, 0);
}

// -------------------------------------------------------------------- JSON

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_coeff<Rational>(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational (string or integer), got " + j.dump());
}

}  // namespace

FrobeniusAlgebra frobenius_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("mult") || !j.contains("unit") ||
      !j.contains("pairing")) {
    throw ParseError("Frobenius algebra JSON needs dim, mult, unit and pairing");
  }
  if (!j["dim"].is_number_integer()) throw ParseError("dim must be an integer");
  const int d = j["dim"].get<int>();
  if (d < 1) throw ParseError("dim must be >= 1");
  auto check_array = [](const nlohmann::json& a, int n, const std::string& what) {
    if (!a.is_array() || static_cast<int>(a.size()) != n) {
      throw ParseError(what + " must be an array of length " + std::to_string(n));
    }
  };
  const auto& m = j["mult"];
  check_array(m, d, "mult");
  std::vector<Rational> mult(static_cast<std::size_t>(d) * d * d);
  for (int a = 0; a < d; ++a) {
    check_array(m[a], d, "mult[i]");
    for (int b = 0; b < d; ++b) {
      check_array(m[a][b], d, "mult[i][j]");
      for (int c = 0; c < d; ++c) {
        mult[(static_cast<std::size_t>(a) * d + b) * d + c] = rational_from_json(m[a][b][c]);
      }
    }
  }
  check_array(j["unit"], d, "unit");
  std::vector<Rational> unit(d);
  for (int a = 0; a < d; ++a) unit[a] = rational_from_json(j["unit"][a]);
  check_array(j["pairing"], d, "pairing");
  QMatrix pairing(d, d);
  for (int a = 0; a < d; ++a) {
    check_array(j["pairing"][a], d, "pairing[i]");
    for (int b = 0; b < d; ++b) pairing(a, b) = rational_from_json(j["pairing"][a][b]);
  }
  return FrobeniusAlgebra(d, std::move(mult), std::move(unit), std::move(pairing));
}

nlohmann::json to_json(const FrobeniusAlgebra& f) {
  const int d = f.dim();
  nlohmann::json mult = nlohmann::json::array();
  for (int a = 0; a < d; ++a) {
    nlohmann::json plane = nlohmann::json::array();
    for (int b = 0; b < d; ++b) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < d; ++c) row.push_back(f.mult(a, b, c).get_str());
      plane.push_back(std::move(row));
    }
    mult.push_back(std::move(plane));
  }
  nlohmann::json unit = nlohmann::json::array();
  for (const auto& u : f.unit()) unit.push_back(u.get_str());
  return {{"dim", d}, {"mult", std::move(mult)}, {"unit", std::move(unit)},
          {"pairing", f.pairing().to_json()}};
}

Cobordism cobordism_from_json(const nlohmann::json& j) {
  const nlohmann::json* word = &j;
  int source = -1;
  if (j.is_object()) {
    if (!j.contains("word")) throw ParseError("cobordism object needs a 'word' list");
    word = &j["word"];
    if (j.contains("source")) {
      if (!j["source"].is_number_integer()) throw ParseError("source must be an integer");
      source = j["source"].get<int>();
    }
  }
  if (!word->is_array()) throw ParseError("cobordism word must be a JSON array");

  std::vector<Cobordism::Layer> layers;
  for (const auto& entry : *word) {
    Cobordism::Layer layer;
    if (entry.is_string()) {
      layer.push_back(parse_generator(entry.get<std::string>()));
    } else if (entry.is_array()) {
      for (const auto& g : entry) {
        if (!g.is_string()) throw ParseError("generator names must be strings");
        layer.push_back(parse_generator(g.get<std::string>()));
      }
    } else {
      throw ParseError("cobordism layer must be a name or a list of names");
    }
    layers.push_back(std::move(layer));
  }
  if (source < 0) source = layers.empty() ? 0 : layer_source(layers.front());
  return Cobordism(source, std::move(layers));
}

nlohmann::json to_json(const Cobordism& c) {
  nlohmann::json word = nlohmann::json::array();
  for (const auto& layer : c.layers()) {
    nlohmann::json names = nlohmann::json::array();
    for (Generator g : layer) names.push_back(to_string(g));
    word.push_back(std::move(names));
  }
  return {{"source", c.source()}, {"target", c.target()}, {"word", std::move(word)}};
}

}  // namespace qinv
