#include "qinv/coeff.hpp"

#include <cctype>
#include <stdexcept>

#include "qinv/errors.hpp"

namespace qinv {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(i)");
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const Integer& c) { return c.get_str(); }

std::string to_string(const Rational& c) { return c.get_str(); }

std::string to_string(const GaussianRational& c) {
  const bool has_re = sgn(c.real()) != 0;
  const bool has_im = sgn(c.imag()) != 0;
  if (!has_im) return c.real().get_str();
  std::string im;
  if (c.imag() == 1) {
    im = "i";
  } else if (c.imag() == -1) {
    im = "-i";
  } else {
    im = c.imag().get_str() + "i";
  }
  if (!has_re) return im;
  return c.real().get_str() + (sgn(c.imag()) > 0 ? "+" : "") + im;
}

std::complex<double> to_complex(const Integer& c) { return {c.get_d(), 0.0}; }
std::complex<double> to_complex(const Rational& c) { return {c.get_d(), 0.0}; }
std::complex<double> to_complex(const GaussianRational& c) {
  return {c.real().get_d(), c.imag().get_d()};
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw ParseError("malformed integer '" + std::string(text) + "'");
  Integer out;
  std::string s(text.front() == '+' ? text.substr(1) : text);
  out.set_str(s, 10);
  return out;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

}  // namespace

template <>
Integer parse_coeff<Integer>(std::string_view text) {
  return parse_integer(strip_spaces(text));
}

template <>
Rational parse_coeff<Rational>(std::string_view text) {
  return parse_rational(strip_spaces(text));
}

template <>
GaussianRational parse_coeff<GaussianRational>(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty coefficient");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));

  std::string_view body(s);
  body.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    if (body[pos] == '+' || body[pos] == '-') {
      split = pos;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_rational(im_text);
  }
  Rational re = re_text.empty() ? Rational(0) : parse_rational(re_text);
  return {re, im};
}

}  // namespace qinv
