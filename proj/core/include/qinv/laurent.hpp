#pragma once

// Sparse Laurent polynomials in one formal variable over an exact ring.
//
// The variable is identified by a tag ("A", "s", "hbar", ...). An empty tag
// marks an untagged constant that adopts the tag of whatever it is combined
// with; two different non-empty tags never mix.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "qinv/coeff.hpp"
#include "qinv/errors.hpp"

namespace qinv {

template <class C>
class LaurentPoly {
 public:
  using Coeff = C;
  using TermMap = std::map<int, C>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

  static LaurentPoly constant(const C& c, std::string var = {}) {
    LaurentPoly p(std::move(var));
    p.add_term(0, c);
    return p;
  }
  static LaurentPoly monomial(std::string var, int exponent, const C& c = C(1)) {
    LaurentPoly p(std::move(var));
    p.add_term(exponent, c);
    return p;
  }

  const std::string& var() const { return var_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  C coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? C(0) : it->second;
  }

  // Adds c * var^exponent, dropping the entry if it cancels.
  void add_term(int exponent, const C& c) {
    if (qinv::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (qinv::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    adopt_tag(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    adopt_tag(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  LaurentPoly& operator*=(const C& c) {
    if (qinv::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out(a.var_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(merged_tag(a, b));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }
  friend LaurentPoly operator*(LaurentPoly a, const C& c) { return a *= c; }
  friend LaurentPoly operator*(const C& c, LaurentPoly a) { return a *= c; }

  // Equality ignores the tag of the zero polynomial and of untagged constants.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_ != b.terms_) return false;
    return a.var_.empty() || b.var_.empty() || a.var_ == b.var_ || a.terms_.empty();
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result = constant(C(1), var_);
    LaurentPoly base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  // v -> v^-1.
  LaurentPoly invert_var() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  // Exponent 2m of the current variable becomes exponent -m of new_var.
  LaurentPoly reindex_even(std::string new_var) const {
    LaurentPoly out(std::move(new_var));
    for (const auto& [e, c] : terms_) {
      if (e % 2 != 0) {
        throw ParityError("odd exponent " + std::to_string(e) + " in " + var_ +
                          "-polynomial cannot be halved");
      }
      out.terms_.emplace(-e / 2, c);
    }
    return out;
  }

  // Value at v = exp(2 pi i numerator / denominator), double precision.
  std::complex<double> eval_root_of_unity(std::int64_t numerator, std::int64_t denominator) const {
    if (denominator <= 0) throw RangeError("root-of-unity denominator must be positive");
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
      // Reduce the phase exactly before converting to an angle.
      const std::int64_t r = mul_mod(numerator, e, denominator);
      const long double angle = 2.0L * std::numbers::pi_v<long double> *
                                static_cast<long double>(r) / static_cast<long double>(denominator);
      sum += to_complex(c) * std::polar(1.0, static_cast<double>(angle));
    }
    return sum;
  }

  // Human-readable, descending exponents: "-s^8 + s^6 + s^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const std::string v = var_.empty() ? "x" : var_;
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const int e = it->first;
      C c = it->second;
      const bool negative = prints_negative(c);
      if (negative) c = -c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;

      std::string power;
      if (e == 1) {
        power = v;
      } else if (e != 0) {
        power = v + "^" + std::to_string(e);
      }
      if (power.empty()) {
        out += qinv::to_string(c);
      } else if (is_one(c)) {
        out += power;
      } else if (is_compound(c)) {
        out += "(" + qinv::to_string(c) + ")*" + power;
      } else {
        out += qinv::to_string(c) + "*" + power;
      }
    }
    return out;
  }

 private:
  // a * b mod m in [0, m), without overflow for m < 2^62.
  static std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    a %= m;
    b %= m;
    if (a < 0) a += m;
    if (b < 0) b += m;
    std::int64_t result = 0;
    while (b > 0) {
      if (b & 1) result = (result + a) % m;
      a = (a * 2) % m;
      b >>= 1;
    }
    return result;
  }

  static std::string merged_tag(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var_.empty()) return b.var_;
    if (b.var_.empty() || a.var_ == b.var_) return a.var_;
    throw TagError("cannot combine polynomials in '" + a.var_ + "' and '" + b.var_ + "'");
  }
  void adopt_tag(const LaurentPoly& o) { var_ = merged_tag(*this, o); }

  std::string var_;
  TermMap terms_;
};

using IntLaurent = LaurentPoly<Integer>;
using RatLaurent = LaurentPoly<Rational>;
using GaussLaurent = LaurentPoly<GaussianRational>;

template <class C>
LaurentPoly<C> invert_var(const LaurentPoly<C>& p) {
  return p.invert_var();
}

template <class C>
LaurentPoly<C> reindex_even(const LaurentPoly<C>& p, std::string new_var) {
  return p.reindex_even(std::move(new_var));
}

template <class C>
std::complex<double> eval_root_of_unity(const LaurentPoly<C>& p, std::int64_t numerator,
                                        std::int64_t denominator) {
  return p.eval_root_of_unity(numerator, denominator);
}

// {"var": "s", "terms": [[exponent, "coeff"], ...]}, exponents ascending.
template <class C>
nlohmann::json to_json(const LaurentPoly<C>& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, qinv::to_string(c)});
  return {{"var", p.var()}, {"terms", std::move(terms)}};
}

template <class C>
LaurentPoly<C> laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("var") || !j.contains("terms") || !j["var"].is_string() ||
      !j["terms"].is_array()) {
    throw ParseError("Laurent polynomial JSON needs string 'var' and array 'terms'");
  }
  LaurentPoly<C> p(j["var"].template get<std::string>());
  bool have_prev = false;
  int prev = 0;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      throw ParseError("each term must be [integer exponent, coefficient]");
    }
    const int e = term[0].template get<int>();
    if (have_prev && e <= prev) throw ParseError("term exponents must be strictly ascending");
    have_prev = true;
    prev = e;
    C c = term[1].is_string() ? parse_coeff<C>(term[1].template get<std::string>())
          : term[1].is_number_integer()
              ? parse_coeff<C>(std::to_string(term[1].template get<long long>()))
              : throw ParseError("coefficient must be a decimal string");
    if (is_zero(c)) throw ParseError("zero coefficient in canonical term list");
    p.add_term(e, c);
  }
  return p;
}

}  // namespace qinv
