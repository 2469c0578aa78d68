#include "qinv/gq.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <utility>

#include "qinv/errors.hpp"

namespace qinv {

HbarCoeff hbar_coeff(const GaussianRational& c, int hbar_power) {
  return HbarCoeff::monomial(kHbarVar, hbar_power, c);
}

namespace {

VariableNames numbered(const std::string& stem, int n) {
  VariableNames out;
  for (int k = 1; k <= n; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

const HbarCoeff& minus_i_hbar() {
  static const HbarCoeff value = hbar_coeff(GaussianRational(Rational(0), Rational(-1)), 1);
  return value;
}

const HbarCoeff& i_hbar() {
  static const HbarCoeff value = hbar_coeff(GaussianRational::i(), 1);
  return value;
}

// (negative, body) for each term, highest monomial first.
std::vector<std::pair<bool, std::string>> term_pieces(const Poly& p, const VariableNames& names) {
  std::vector<std::pair<bool, std::string>> out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    std::vector<std::string> factors;
    bool negative = false;
    if (coeff.size() == 1) {
      const int e = coeff.terms().begin()->first;
      GaussianRational g = coeff.terms().begin()->second;
      if (prints_negative(g)) {
        negative = true;
        g = -g;
      }
      if (!is_one(g)) factors.push_back(is_compound(g) ? "(" + to_string(g) + ")" : to_string(g));
      if (e == 1) {
        factors.emplace_back(kHbarVar);
      } else if (e != 0) {
        factors.push_back(std::string(kHbarVar) + "^" + std::to_string(e));
      }
    } else {
      factors.push_back("(" + coeff.to_string() + ")");
    }
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      factors.push_back(mono[v] == 1 ? names.at(v) : names.at(v) + "^" + std::to_string(mono[v]));
    }
    std::string body;
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    if (body.empty()) body = "1";
    out.emplace_back(negative, std::move(body));
  }
  return out;
}

std::string join_pieces(const std::vector<std::pair<bool, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [negative, body] : pieces) {
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

Poly derivative_multi(Poly p, const std::vector<int>& alpha) {
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    for (int r = 0; r < alpha[v] && !p.is_zero(); ++r) p = p.derivative(static_cast<int>(v));
  }
  return p;
}

long binomial(int n, int k) {
  long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

VariableNames phase_space_names(int n) {
  VariableNames out = numbered("q", n);
  const VariableNames p = numbered("p", n);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

VariableNames position_names(int n) { return numbered("x", n); }

VariableNames complex_names(int n) {
  VariableNames out = numbered("z", n);
  const VariableNames zb = numbered("zb", n);
  out.insert(out.end(), zb.begin(), zb.end());
  return out;
}

// ------------------------------------------------------------------- Poly

Poly Poly::constant(int nvars, const HbarCoeff& c) {
  Poly p(nvars);
  p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw RangeError("variable index out of range");
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[index] = 1;
  Poly p(nvars);
  p.add_term(m, hbar_coeff(GaussianRational(1)));
  return p;
}

int Poly::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, std::accumulate(m.begin(), m.end(), 0));
  return best;
}

void Poly::add_term(const Monomial& m, const HbarCoeff& c) {
  if (static_cast<int>(m.size()) != nvars_) throw DimensionError("monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (nvars_ != o.nvars_) {
    throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                         std::to_string(o.nvars_) + " variables");
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const HbarCoeff& c) {
  TermMap out;
  for (auto& [m, coeff] : terms_) {
    HbarCoeff product = coeff * c;
    if (!product.is_zero()) out.emplace(m, std::move(product));
  }
  terms_ = std::move(out);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out(a.nvars_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out(a.nvars_);
  Poly::Monomial m(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly out = constant(nvars_, GaussianRational(1));
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw RangeError("derivative variable out of range");
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial lowered = m;
    --lowered[var];
    out.add_term(lowered, c * GaussianRational(m[var]));
  }
  return out;
}

std::string Poly::to_string(const VariableNames& names) const {
  return join_pieces(term_pieces(*this, names));
}

// -------------------------------------------------------- phase space ops

int phase_dim(const PolyObservable& f) {
  if (f.nvars() % 2 != 0) throw DimensionError("phase-space observable needs an even variable count");
  return f.nvars() / 2;
}

PolyObservable coordinate_q(int n, int k) {
  if (k < 1 || k > n) throw RangeError("coordinate index out of range");
  return Poly::variable(2 * n, k - 1);
}

PolyObservable coordinate_p(int n, int k) {
  if (k < 1 || k > n) throw RangeError("momentum index out of range");
  return Poly::variable(2 * n, n + k - 1);
}

Poly VectorFieldPoly::apply(const Poly& g) const {
  Poly out(g.nvars());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    out += components[i] * g.derivative(static_cast<int>(i));
  }
  return out;
}

VectorFieldPoly hamiltonian_vf(const PolyObservable& f) {
  const int n = phase_dim(f);
  VectorFieldPoly x;
  x.components.assign(static_cast<std::size_t>(2 * n), Poly(2 * n));
  for (int k = 0; k < n; ++k) {
    x.components[k] = f.derivative(n + k);
    x.components[n + k] = -f.derivative(k);
  }
  return x;
}

VectorFieldPoly vf_commutator(const VectorFieldPoly& x, const VectorFieldPoly& y) {
  if (x.components.size() != y.components.size()) throw DimensionError("vector fields differ in dimension");
  VectorFieldPoly out;
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    out.components.push_back(x.apply(y.components[i]) - y.apply(x.components[i]));
  }
  return out;
}

PolyObservable poisson(const PolyObservable& f, const PolyObservable& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("Poisson bracket of observables on different phase spaces");
  return hamiltonian_vf(f).apply(g);
}

// ----------------------------------------------------------- DiffOperator

DiffOperator DiffOperator::multiplication(const Poly& c) {
  DiffOperator d(c.nvars());
  d.add_term(Multi(static_cast<std::size_t>(c.nvars()), 0), c);
  return d;
}

DiffOperator DiffOperator::derivation(int nvars, int var) {
  if (var < 0 || var >= nvars) throw RangeError("derivation variable out of range");
  Multi alpha(static_cast<std::size_t>(nvars), 0);
  alpha[var] = 1;
  DiffOperator d(nvars);
  d.add_term(alpha, Poly::constant(nvars, GaussianRational(1)));
  return d;
}

DiffOperator DiffOperator::identity(int nvars) {
  return multiplication(Poly::constant(nvars, GaussianRational(1)));
}

void DiffOperator::add_term(const Multi& alpha, const Poly& c) {
  if (static_cast<int>(alpha.size()) != nvars_ || c.nvars() != nvars_) {
    throw DimensionError("operator term arity mismatch");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOperator::check_same(const DiffOperator& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("operators act on different variable sets");
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  check_same(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  check_same(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const HbarCoeff& c) {
  TermMap out;
  for (auto& [alpha, coeff] : terms_) {
    Poly product = coeff * c;
    if (!product.is_zero()) out.emplace(alpha, std::move(product));
  }
  terms_ = std::move(out);
  return *this;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  a.check_same(b);
  const auto n = static_cast<std::size_t>(a.nvars_);
  DiffOperator out(a.nvars_);
  for (const auto& [alpha, c1] : a.terms_) {
    for (const auto& [beta, c2] : b.terms_) {
      // c1 d^alpha c2 d^beta = sum_{gamma <= alpha} C(alpha, gamma) c1 (d^gamma c2) d^(alpha - gamma + beta).
      DiffOperator::Multi gamma(n, 0);
      while (true) {
        Poly moved = derivative_multi(c2, gamma);
        if (!moved.is_zero()) {
          long weight = 1;
          DiffOperator::Multi rest(n);
          for (std::size_t v = 0; v < n; ++v) {
            weight *= binomial(alpha[v], gamma[v]);
            rest[v] = alpha[v] - gamma[v] + beta[v];
          }
          out.add_term(rest, (c1 * moved) * hbar_coeff(GaussianRational(weight)));
        }
        std::size_t v = 0;
        while (v < n && gamma[v] == alpha[v]) gamma[v++] = 0;
        if (v == n) break;
        ++gamma[v];
      }
    }
  }
  return out;
}

Poly DiffOperator::apply(const Poly& g) const {
  if (g.nvars() != nvars_) throw DimensionError("operator applied to a polynomial in other variables");
  Poly out(nvars_);
  for (const auto& [alpha, c] : terms_) out += c * derivative_multi(g, alpha);
  return out;
}

std::string DiffOperator::to_string(const VariableNames& names) const {
  std::vector<std::pair<bool, std::string>> pieces;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, coeff] = *it;
    std::string derivs;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      if (alpha[v] == 0) continue;
      if (!derivs.empty()) derivs += "*";
      derivs += "d_" + names.at(v);
      if (alpha[v] > 1) derivs += "^" + std::to_string(alpha[v]);
    }
    auto coeff_pieces = term_pieces(coeff, names);
    if (derivs.empty()) {
      pieces.insert(pieces.end(), coeff_pieces.begin(), coeff_pieces.end());
    } else if (coeff_pieces.size() == 1) {
      auto [negative, body] = coeff_pieces.front();
      pieces.emplace_back(negative, body == "1" ? derivs : body + "*" + derivs);
    } else {
      pieces.emplace_back(false, "(" + coeff.to_string(names) + ")*" + derivs);
    }
  }
  return join_pieces(pieces);
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

// ---------------------------------------------------------- quantization

DiffOperator prequant(const PolyObservable& f) {
  const int n = phase_dim(f);
  const VectorFieldPoly x = hamiltonian_vf(f);
  DiffOperator q(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    if (x.components[i].is_zero()) continue;
    DiffOperator::Multi alpha(static_cast<std::size_t>(2 * n), 0);
    alpha[i] = 1;
    q.add_term(alpha, x.components[i] * minus_i_hbar());
  }
  // -A(X_f) = sum_j p_j X_f^{q_j} = sum_j p_j df/dp_j.
  Poly scalar = -f;
  for (int j = 0; j < n; ++j) scalar += coordinate_p(n, j + 1) * x.components[j];
  q.add_term(DiffOperator::Multi(static_cast<std::size_t>(2 * n), 0), scalar);
  return q;
}

DiffOperator dirac_residual(const PolyObservable& f, const PolyObservable& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("observables on different phase spaces");
  return commutator(prequant(f), prequant(g)) + prequant(poisson(f, g)) * i_hbar();
}

DiffOperator schrodinger_rep(int n, Canonical which, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw RangeError("Schrodinger index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  if (which == Canonical::kCoordinate) return DiffOperator::multiplication(Poly::variable(n, k - 1));
  return DiffOperator::derivation(n, k - 1) * minus_i_hbar();
}

DiffOperator schrodinger_quantize(const PolyObservable& f) {
  const int n = phase_dim(f);
  if (f.degree() > 1) {
    throw ValidityError("the Schrodinger representation is defined here on affine observables only");
  }
  DiffOperator out(n);
  for (const auto& [m, c] : f.terms()) {
    int var = -1;
    for (int v = 0; v < 2 * n; ++v) {
      if (m[v] != 0) var = v;
    }
    if (var < 0) {
      out += DiffOperator::multiplication(Poly::constant(n, c));
    } else if (var < n) {
      out += schrodinger_rep(n, Canonical::kCoordinate, var + 1) * c;
    } else {
      out += schrodinger_rep(n, Canonical::kMomentum, var - n + 1) * c;
    }
  }
  return out;
}

DiffOperator schrodinger_dirac_residual(const PolyObservable& f, const PolyObservable& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("observables on different phase spaces");
  return commutator(schrodinger_quantize(f), schrodinger_quantize(g)) +
         schrodinger_quantize(poisson(f, g)) * i_hbar();
}

PolarizationCheck is_polarized(const Poly& s) {
  if (s.nvars() % 2 != 0) throw DimensionError("expected variables z1..zn, zb1..zbn");
  const int n = s.nvars() / 2;
  for (int k = 0; k < n; ++k) {
    Poly w = s.derivative(n + k);
    if (!w.is_zero()) return {false, k + 1, std::move(w)};
  }
  return {};
}

// ----------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableNames& names)
      : text_(text), names_(names), nvars_(static_cast<int>(names.size())) {}

  Poly parse() {
    Poly out = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Poly out = term();
    if (negative) out = -out;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  Poly term() {
    Poly out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer too large");
    return value;
  }

  int exponent() {
    const bool negative = accept('-');
    const long e = integer();
    return static_cast<int>(negative ? -e : e);
  }

  Poly factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];

    if (ch == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return power_of(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Rational value(integer());
      skip();
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        const long den = integer();
        if (den == 0) fail("zero denominator");
        value /= den;
      }
      return power_of(Poly::constant(nvars_, GaussianRational(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == kHbarVar) {
        int e = 1;
        if (accept('^')) e = exponent();
        return Poly::constant(nvars_, hbar_coeff(GaussianRational(1), e));
      }
      if (name == "i") return power_of(Poly::constant(nvars_, GaussianRational::i()));
      for (int v = 0; v < nvars_; ++v) {
        if (names_[v] == name) return power_of(Poly::variable(nvars_, v));
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Poly power_of(Poly base) {
    if (!accept('^')) return base;
    const int e = exponent();
    if (e < 0) fail("negative exponents are only allowed on hbar");
    return base.pow(static_cast<unsigned>(e));
  }

  std::string_view text_;
  const VariableNames& names_;
  int nvars_;
  std::size_t pos_ = 0;
};

int max_suffix(std::string_view text, std::initializer_list<std::string_view> stems) {
  int best = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!std::isalpha(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view word = text.substr(start, pos - start);
    for (std::string_view stem : stems) {
      if (word.size() <= stem.size() || word.substr(0, stem.size()) != stem) continue;
      const std::string_view digits = word.substr(stem.size());
      int value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec == std::errc{} && ptr == digits.data() + digits.size()) best = std::max(best, value);
    }
  }
  return best;
}

}  // namespace

Poly parse_poly(std::string_view text, const VariableNames& names) {
  return PolyParser(text, names).parse();
}

int infer_phase_dim(std::string_view text) { return max_suffix(text, {"q", "p"}); }

int infer_complex_dim(std::string_view text) { return max_suffix(text, {"z", "zb"}); }

}  // namespace qinv
