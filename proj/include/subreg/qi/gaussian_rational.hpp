#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subreg::qi {

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive
/// denominator).
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical text form: `N` or `N/D`.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

namespace detail {

// Matches -?\d+(/\d+)? exactly over the whole view.
inline bool is_rational_token(std::string_view s) {
  std::size_t k = 0;
  if (k < s.size() && s[k] == '-') ++k;
  std::size_t digits = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
    ++k;
    ++digits;
  }
  if (digits == 0) return false;
  if (k == s.size()) return true;
  if (s[k] != '/') return false;
  ++k;
  digits = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
    ++k;
    ++digits;
  }
  return digits > 0 && k == s.size();
}

}  // namespace detail

inline Rational parse_rational(std::string_view s) {
  if (!detail::is_rational_token(s)) {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
  Rational r;
  if (r.set_str(std::string(s), 10) != 0 || sgn(r.get_den()) == 0) {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
  r.canonicalize();
  return r;
}

/// Exact scalar a + b·i with a, b rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit by intent
  GaussianRational(Rational re, Rational im = Rational(0))
      : re_(std::move(re)), im_(std::move(im)) {
    // mpq_class(num, den) does not reduce, and unreduced values compare unequal
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_real()) return GaussianRational(Rational(1 / re_));
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      if (sgn(im_) != 0) im_ *= o.re_;
      return *this;
    }
    if (is_real()) {
      im_ = re_ * o.im_;
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_real()) {
      if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

/// Interchange grammar: `R`, `R+Si`, `R-Si` or `Si`, with R and S of the form
/// -?\d+(/\d+)?. Zero is `0`; the imaginary unit is `1i`.
inline std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(z.im()) + "i";
  if (is_zero(z.re())) return im;
  std::string out = to_string(z.re());
  if (sgn(z.im()) > 0) {
    out += '+';
    out += im;
  } else {
    out += '-';
    out += to_string(Rational(-z.im())) + "i";
  }
  return out;
}

inline GaussianRational parse_gaussian(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {Rational(0), parse_rational(body)};
  }
  std::string_view re = body.substr(0, split);
  std::string_view im = body.substr(split + 1);
  // The sign between the parts is the only sign allowed on the imaginary part.
  if (!im.empty() && im.front() == '-') {
    throw std::invalid_argument("malformed Gaussian rational: '" + std::string(s) + "'");
  }
  Rational im_value = parse_rational(im);
  if (body[split] == '-') im_value = -im_value;
  return {parse_rational(re), im_value};
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

}  // namespace subreg::qi
