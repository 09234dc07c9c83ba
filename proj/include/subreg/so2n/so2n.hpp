#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/lie/antiinvolution.hpp"
#include "subreg/lie/subspace.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::so2n {

using lie::Antiinvolution;
using lie::LieAlgebra;
using lie::Subspace;
using qi::GaussianRational;
using qi::QiMatrix;
using qi::Vector;

/// Positions of the named basis elements of so(2n) in the order
/// H_1..H_n, X_jk (j ≠ k, lexicographic), Y_jk (j < k), Z_jk (j < k).
/// Indices j, k are 1-based as in the usual notation.
class So2nIndex {
 public:
  explicit So2nIndex(std::size_t n) : n_(n) {
    if (n < 3) throw std::invalid_argument("so(2n) requires n >= 3");
  }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return n_ * (2 * n_ - 1); }
  std::size_t pairs() const { return n_ * (n_ - 1) / 2; }

  std::size_t h(std::size_t k) const {
    check(k);
    return k - 1;
  }
  std::size_t x(std::size_t j, std::size_t k) const {
    check(j);
    check(k);
    if (j == k) throw std::invalid_argument("X_jk needs j != k");
    std::size_t before = (j - 1) * (n_ - 1);
    return n_ + before + (k < j ? k - 1 : k - 2);
  }
  std::size_t y(std::size_t j, std::size_t k) const { return n_ + n_ * (n_ - 1) + upper(j, k); }
  std::size_t z(std::size_t j, std::size_t k) const { return n_ + n_ * (n_ - 1) + pairs() + upper(j, k); }

  std::string sep() const { return n_ >= 10 ? "_" : ""; }

 private:
  void check(std::size_t k) const {
    if (k < 1 || k > n_) throw std::out_of_range("so(2n) index out of range");
  }
  std::size_t upper(std::size_t j, std::size_t k) const {
    check(j);
    check(k);
    if (j >= k) throw std::invalid_argument("Y_jk and Z_jk need j < k");
    // pairs (a, b) with a < b before (j, k) in lexicographic order
    std::size_t before = 0;
    for (std::size_t a = 1; a < j; ++a) before += n_ - a;
    return before + (k - j - 1);
  }

  std::size_t n_;
};

namespace detail {

/// E_ab with 1-based indices.
inline void add_e(QiMatrix& m, std::size_t a, std::size_t b, const GaussianRational& z) { m(a - 1, b - 1) += z; }

inline QiMatrix h_matrix(std::size_t n, std::size_t k) {
  QiMatrix m(2 * n, 2 * n);
  add_e(m, 2 * k - 1, 2 * k, GaussianRational::i());
  add_e(m, 2 * k, 2 * k - 1, -GaussianRational::i());
  return m;
}

/// G⁺_jk and G⁻_jk for j < k.
inline QiMatrix g_matrix(std::size_t n, std::size_t j, std::size_t k, bool plus) {
  const GaussianRational one(1), i = GaussianRational::i();
  const GaussianRational s = plus ? one : -one;
  QiMatrix m(2 * n, 2 * n);
  add_e(m, 2 * j - 1, 2 * k - 1, one);
  add_e(m, 2 * k - 1, 2 * j - 1, -one);
  add_e(m, 2 * j, 2 * k, s);
  add_e(m, 2 * k, 2 * j, -s);
  add_e(m, 2 * j - 1, 2 * k, i);
  add_e(m, 2 * j, 2 * k - 1, -s * i);
  add_e(m, 2 * k, 2 * j - 1, -i);
  add_e(m, 2 * k - 1, 2 * j, s * i);
  return m;
}

/// G^±_jk for any j ≠ k, with G_kj = −conj(G_jk).
inline QiMatrix g_any(std::size_t n, std::size_t j, std::size_t k, bool plus) {
  if (j < k) return g_matrix(n, j, k, plus);
  return -GaussianRational(1) * g_matrix(n, k, j, plus).conj();
}

inline bool is_skew(const QiMatrix& m) { return m.transpose() == -GaussianRational(1) * m; }

}  // namespace detail

/// Value of the root of the basis element at `idx` on H_k (ε-coordinates).
inline std::vector<long> root_of(const So2nIndex& ix, std::size_t idx) {
  const std::size_t n = ix.n();
  std::vector<long> r(n, 0);
  if (idx < n) return r;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k) {
      if (j != k && ix.x(j, k) == idx) {
        r[j - 1] = 1;
        r[k - 1] = -1;
        return r;
      }
      if (j < k && ix.y(j, k) == idx) {
        r[j - 1] = r[k - 1] = 1;
        return r;
      }
      if (j < k && ix.z(j, k) == idx) {
        r[j - 1] = r[k - 1] = -1;
        return r;
      }
    }
  throw std::out_of_range("so(2n) basis index out of range");
}

/// so(2n, C) in the basis above, with its defining 2n×2n realization.
/// Checks skew-symmetry, completeness and the root-vector property.
inline LieAlgebra build_so2n(std::size_t n) {
  So2nIndex ix(n);
  const std::string sp = ix.sep();
  std::vector<std::string> labels;
  std::vector<QiMatrix> basis;
  for (std::size_t k = 1; k <= n; ++k) {
    labels.push_back("H" + std::to_string(k));
    basis.push_back(detail::h_matrix(n, k));
  }
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k) {
      if (j == k) continue;
      labels.push_back("X" + std::to_string(j) + sp + std::to_string(k));
      basis.push_back(detail::g_any(n, j, k, true));
    }
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k) {
      labels.push_back("Y" + std::to_string(j) + sp + std::to_string(k));
      basis.push_back(detail::g_any(n, k, j, false));
    }
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k) {
      labels.push_back("Z" + std::to_string(j) + sp + std::to_string(k));
      basis.push_back(detail::g_any(n, j, k, false));
    }
  if (basis.size() != ix.dim()) throw std::logic_error("so(2n) basis has the wrong size");
  for (const auto& m : basis)
    if (!detail::is_skew(m)) throw std::logic_error("so(2n) basis element is not skew-symmetric");
  // from_matrices rejects a dependent list, so the basis spans so(2n).
  LieAlgebra g = LieAlgebra::from_matrices(std::move(labels), std::move(basis));
  for (std::size_t idx = n; idx < g.dim(); ++idx) {
    auto root = root_of(ix, idx);
    for (std::size_t k = 1; k <= n; ++k) {
      Vector expect = GaussianRational(root[k - 1]) * g.basis_vector(idx);
      if (g.bracket(g.basis_vector(ix.h(k)), g.basis_vector(idx)) != expect)
        throw std::logic_error("root-vector property fails for " + g.label(idx));
    }
  }
  return g;
}

/// so(m, C) in the basis A_ij = E_ij − E_ji (i < j).
inline LieAlgebra build_so_standard(std::size_t m) {
  if (m < 2) throw std::invalid_argument("so(m) requires m >= 2");
  std::vector<std::string> labels;
  std::vector<QiMatrix> basis;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      QiMatrix a(m, m);
      a(i - 1, j - 1) = 1;
      a(j - 1, i - 1) = -1;
      labels.push_back("A" + std::to_string(i) + (m >= 10 ? "_" : "") + std::to_string(j));
      basis.push_back(std::move(a));
    }
  return LieAlgebra::from_matrices(std::move(labels), std::move(basis));
}

/// The Cartan subalgebra span{H_k}.
inline Subspace cartan(const LieAlgebra& g, const So2nIndex& ix) {
  std::vector<Vector> gens;
  for (std::size_t k = 1; k <= ix.n(); ++k) gens.push_back(g.basis_vector(ix.h(k)));
  return Subspace::span(g.dim(), gens);
}

namespace detail {

inline Antiinvolution tau_from_matrix_map(const LieAlgebra& g, const QiMatrix& j) {
  std::vector<Vector> images;
  for (const auto& m : g.matrix_rep()) {
    auto c = g.from_matrix(j * m.conj() * j);
    if (!c) throw std::logic_error("conjugation leaves so(2n)");
    images.push_back(std::move(*c));
  }
  Antiinvolution t = Antiinvolution::from_basis_images(images);
  if (!t.is_involution()) throw std::logic_error("conjugation is not an involution");
  if (lie::find_automorphism_violation(g, t)) throw std::logic_error("conjugation is not an automorphism");
  return t;
}

}  // namespace detail

/// A ↦ J·Ā·J with J = diag(1, …, 1, −1): the real form so(2n−1, 1).
inline Antiinvolution build_tau_lorentz(const LieAlgebra& g, std::size_t n) {
  QiMatrix j = QiMatrix::identity(2 * n);
  j(2 * n - 1, 2 * n - 1) = -1;
  return detail::tau_from_matrix_map(g, j);
}

/// A ↦ Ā: the compact real form so(2n).
inline Antiinvolution build_tau_compact(const LieAlgebra& g, std::size_t n) {
  return detail::tau_from_matrix_map(g, QiMatrix::identity(2 * n));
}

}  // namespace subreg::so2n
