#pragma once

#include "subreg/qi/linalg.hpp"
#include "subreg/qi/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subreg::qi {

/// Univariate polynomial over Q(i), coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(GaussianRational z) { return Polynomial({std::move(z)}); }
  static Polynomial monomial(std::size_t degree, GaussianRational z = 1) {
    std::vector<GaussianRational> c(degree + 1);
    c[degree] = std::move(z);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<GaussianRational>& coefficients() const { return c_; }
  GaussianRational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(0); }
  const GaussianRational& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    GaussianRational inv = leading().inverse();
    Polynomial p = *this;
    for (auto& z : p.c_) z *= inv;
    return p;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  GaussianRational operator()(const GaussianRational& x) const {
    GaussianRational acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  /// Horner evaluation at a square matrix.
  QiMatrix operator()(const QiMatrix& m) const {
    if (!m.is_square()) throw std::invalid_argument("polynomial evaluated at non-square matrix");
    QiMatrix acc(m.rows(), m.cols());
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc = acc * m;
      for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += c_[k];
    }
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of Euclidean division.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<GaussianRational> r = a.c_;
    std::vector<GaussianRational> q(a.c_.size() - b.c_.size() + 1);
    GaussianRational inv = b.leading().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
      GaussianRational f = r[k + b.c_.size() - 1] * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
      q[k] = std::move(f);
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

inline std::string to_string(const Polynomial& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const auto& z = p.coefficients()[k];
    if (z.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = to_string(z);
    if (k == 0)
      out += coeff;
    else {
      if (!z.is_one()) out += "(" + coeff + ")*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

/// Characteristic polynomial det(t·I − m) by Faddeev–LeVerrier.
inline Polynomial char_poly(const QiMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<GaussianRational> c(n + 1);
  c[n] = 1;
  QiMatrix aux(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux;
    for (std::size_t d = 0; d < n; ++d) aux(d, d) += c[n - k + 1];
    QiMatrix am = m * aux;
    c[n - k] = -am.trace() / GaussianRational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

/// Monic minimal polynomial from the first linear dependency among
/// I, m, m², ….
inline Polynomial minimal_polynomial(const QiMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal_polynomial of non-square matrix");
  const std::size_t n = m.rows();
  auto flatten = [n](const QiMatrix& a) {
    Vector v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = a(r, c);
    return v;
  };
  std::vector<Vector> powers;
  QiMatrix p = QiMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(flatten(p));
    // Columns are the powers; a kernel vector is a vanishing polynomial.
    QiMatrix cols(n * n, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t r = 0; r < n * n; ++r) cols(r, j) = powers[j][r];
    auto ker = nullspace(cols);
    if (!ker.empty()) return Polynomial(ker.front()).monic();
    p = p * m;
  }
  throw std::logic_error("minimal polynomial degree exceeds matrix size");
}

inline bool is_nilpotent(const QiMatrix& m) { return power(m, m.rows()).is_zero(); }

struct JordanChevalley {
  QiMatrix semisimple;
  QiMatrix nilpotent;
};

/// Additive Jordan–Chevalley decomposition without factoring: Newton
/// iteration s ← s − q(s)·q'(s)⁻¹ with q the squarefree part of the
/// characteristic polynomial, starting from s = m.
inline JordanChevalley jordan_chevalley(const QiMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("jordan_chevalley of non-square matrix");
  Polynomial q = squarefree_part(char_poly(m));
  Polynomial dq = q.derivative();
  QiMatrix s = m;
  // Converges quadratically: q(s)^(2^k) vanishes once 2^k >= n.
  for (std::size_t iter = 0; iter <= 64; ++iter) {
    QiMatrix qs = q(s);
    if (qs.is_zero()) return {s, m - s};
    s = s - qs * inverse(dq(s));
  }
  throw std::logic_error("Jordan-Chevalley iteration did not converge");
}

}  // namespace subreg::qi
