#pragma once

// Exact coefficient rings: Z, Q and the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace qinv {

using Integer = mpz_class;
using Rational = mpq_class;

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {  // NOLINT
    re_.canonicalize();
  }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  // Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Integer& c) { return sgn(c) == 0; }
inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const GaussianRational& c) { return c.is_zero(); }

inline bool is_one(const Integer& c) { return c == 1; }
inline bool is_one(const Rational& c) { return c == 1; }
inline bool is_one(const GaussianRational& c) { return c == GaussianRational(1); }

// True when the printed form needs parentheses inside a product.
inline bool is_compound(const Integer&) { return false; }
inline bool is_compound(const Rational&) { return false; }
inline bool is_compound(const GaussianRational& c) {
  return sgn(c.real()) != 0 && sgn(c.imag()) != 0;
}

// Negative in the sense used for printing "a - b" instead of "a + -b".
inline bool prints_negative(const Integer& c) { return sgn(c) < 0; }
inline bool prints_negative(const Rational& c) { return sgn(c) < 0; }
inline bool prints_negative(const GaussianRational& c) {
  return sgn(c.real()) < 0 || (sgn(c.real()) == 0 && sgn(c.imag()) < 0);
}

std::string to_string(const Integer& c);
std::string to_string(const Rational& c);
// "3", "-1/2", "i", "-2i", "1+3i", "1/2-i".
std::string to_string(const GaussianRational& c);

std::complex<double> to_complex(const Integer& c);
std::complex<double> to_complex(const Rational& c);
std::complex<double> to_complex(const GaussianRational& c);

// Parses the forms produced by to_string. Throws ParseError.
template <class C>
C parse_coeff(std::string_view text);

template <>
Integer parse_coeff<Integer>(std::string_view text);
template <>
Rational parse_coeff<Rational>(std::string_view text);
template <>
GaussianRational parse_coeff<GaussianRational>(std::string_view text);

}  // namespace qinv
