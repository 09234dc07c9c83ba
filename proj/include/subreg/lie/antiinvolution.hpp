#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/lie/subspace.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

namespace subreg::lie {

/// Conjugate-linear involutive automorphism τ(v) = M·conj(v).
class Antiinvolution {
 public:
  Antiinvolution() = default;
  explicit Antiinvolution(QiMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw std::invalid_argument("antiinvolution matrix must be square");
  }

  /// τ from its values on the basis: column k of M is τ(e_k).
  static Antiinvolution from_basis_images(const std::vector<Vector>& images) {
    const std::size_t n = images.size();
    QiMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (images[k].size() != n) throw std::invalid_argument("antiinvolution image length mismatch");
      for (std::size_t r = 0; r < n; ++r) m(r, k) = images[k][r];
    }
    return Antiinvolution(std::move(m));
  }

  const QiMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

  Vector operator()(const Vector& v) const { return m_ * qi::conj(v); }

  /// τ² = Id, i.e. M·conj(M) = I.
  bool is_involution() const { return m_ * m_.conj() == QiMatrix::identity(dim()); }

 private:
  QiMatrix m_;
};

/// First basis pair with τ[e_i,e_j] ≠ [τe_i, τe_j], if any.
inline std::optional<std::pair<std::size_t, std::size_t>> find_automorphism_violation(const LieAlgebra& g,
                                                                                       const Antiinvolution& t) {
  if (t.dim() != g.dim()) throw std::invalid_argument("antiinvolution dimension mismatch");
  std::vector<Vector> images;
  for (std::size_t k = 0; k < g.dim(); ++k) images.push_back(t(g.basis_vector(k)));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vector lhs = t(qi::to_dense(g.structure(i, j), g.dim()));
      Vector rhs = g.bracket(images[i], images[j]);
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

/// Image of a complex subspace; conjugate-linear images of complex
/// subspaces are complex subspaces.
inline Subspace apply_tau(const Antiinvolution& t, const Subspace& s) {
  if (!s.is_complex()) throw std::invalid_argument("apply_tau expects a complex subspace");
  if (s.ambient_dim() != t.dim()) throw std::invalid_argument("apply_tau: dimension mismatch");
  std::vector<Vector> images;
  for (const auto& v : s.basis()) images.push_back(t(v));
  return Subspace::span(s.ambient_dim(), images);
}

/// Fixed points of τ inside S, as a real-rational subspace.
///
/// With v = a + i·b and M = P + i·Q, τ(v) = v reads P·a + Q·b = a and
/// Q·a − P·b = b; membership C·v = 0 splits the same way.
inline Subspace real_points(const Antiinvolution& t, const Subspace& s) {
  if (!s.is_complex()) throw std::invalid_argument("real_points expects a complex subspace");
  const std::size_t d = s.ambient_dim();
  if (d != t.dim()) throw std::invalid_argument("real_points: dimension mismatch");
  const QiMatrix& m = t.matrix();
  qi::SparseMatrix sys{2 * d, {}};
  for (std::size_t r = 0; r < d; ++r) {
    SparseVector re_eq, im_eq;
    for (std::size_t c = 0; c < d; ++c) {
      const auto& z = m(r, c);
      GaussianRational p(z.re()), q(z.im());
      GaussianRational a_re = p, b_re = q;    // coefficients of a_c and b_c in the real equation
      GaussianRational a_im = q, b_im = -p;   // and in the imaginary equation
      if (c == r) {
        a_re -= 1;
        b_im -= 1;
      }
      if (!a_re.is_zero()) re_eq.emplace_back(c, a_re);
      if (!a_im.is_zero()) im_eq.emplace_back(c, a_im);
      if (!b_re.is_zero()) re_eq.emplace_back(d + c, b_re);
      if (!b_im.is_zero()) im_eq.emplace_back(d + c, b_im);
    }
    auto by_col = [](const auto& x, const auto& y) { return x.first < y.first; };
    std::sort(re_eq.begin(), re_eq.end(), by_col);
    std::sort(im_eq.begin(), im_eq.end(), by_col);
    sys.rows.push_back(std::move(re_eq));
    sys.rows.push_back(std::move(im_eq));
  }
  for (const auto& row : s.annihilator()) {
    // Row c with C·v = Σ c_k (a_k + i b_k); real part Σ Re c_k a_k − Im c_k b_k, imaginary Σ Im c_k a_k + Re c_k b_k.
    SparseVector re_eq, im_eq;
    for (const auto& [k, z] : row) {
      if (!qi::is_zero(z.re())) re_eq.emplace_back(k, GaussianRational(z.re()));
      if (!qi::is_zero(z.im())) im_eq.emplace_back(k, GaussianRational(z.im()));
    }
    for (const auto& [k, z] : row) {
      if (!qi::is_zero(z.im())) re_eq.emplace_back(d + k, GaussianRational(-z.im()));
      if (!qi::is_zero(z.re())) im_eq.emplace_back(d + k, GaussianRational(z.re()));
    }
    sys.rows.push_back(std::move(re_eq));
    sys.rows.push_back(std::move(im_eq));
  }
  return Subspace::from_storage_rows(d, FieldTag::real_rational, qi::nullspace(sys));
}

}  // namespace subreg::lie
