#pragma once

#include "subreg/qi/echelon.hpp"
#include "subreg/qi/matrix.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subreg::lie {

using qi::GaussianRational;
using qi::QiMatrix;
using qi::Rational;
using qi::SparseVector;
using qi::Vector;

/// Decomposes matrices in the span of a fixed list of basis matrices.
///
/// Rows [vec(M_k) | e_k] are echelonized once; reducing [vec(T) | 0] then
/// leaves [0 | −coords] exactly when T lies in the span.
class MatrixCoordinates {
 public:
  MatrixCoordinates() = default;
  explicit MatrixCoordinates(const std::vector<QiMatrix>& basis) : dim_(basis.size()) {
    if (basis.empty()) return;
    size_ = basis.front().rows();
    flat_ = size_ * size_;
    echelon_ = qi::EchelonBasis(flat_ + dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      const QiMatrix& m = basis[k];
      if (m.rows() != size_ || m.cols() != size_) throw std::invalid_argument("matrix basis shape mismatch");
      SparseVector row = flatten(m);
      row.emplace_back(flat_ + k, GaussianRational(1));
      if (!echelon_.insert(row)) throw std::invalid_argument("matrix basis is linearly dependent");
    }
  }

  std::size_t matrix_size() const { return size_; }

  std::optional<Vector> coordinates(const QiMatrix& t) const {
    if (t.rows() != size_ || t.cols() != size_) throw std::invalid_argument("matrix shape mismatch");
    SparseVector r = echelon_.reduce(flatten(t));
    Vector c(dim_);
    for (const auto& [col, z] : r) {
      if (col < flat_) return std::nullopt;
      c[col - flat_] = -z;
    }
    return c;
  }

 private:
  SparseVector flatten(const QiMatrix& m) const {
    SparseVector s;
    for (std::size_t r = 0; r < size_; ++r)
      for (std::size_t c = 0; c < size_; ++c)
        if (!m(r, c).is_zero()) s.emplace_back(r * size_ + c, m(r, c));
    return s;
  }

  std::size_t dim_ = 0;
  std::size_t size_ = 0;
  std::size_t flat_ = 0;
  qi::EchelonBasis echelon_;
};

/// Finite-dimensional complex Lie algebra given by structure constants in a
/// labeled basis, optionally with a faithful matrix realization.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// `structure[i * dim + j]` holds the coordinates of [e_i, e_j].
  LieAlgebra(std::vector<std::string> labels, std::vector<SparseVector> structure,
             std::vector<QiMatrix> matrix_rep = {})
      : labels_(std::move(labels)), structure_(std::move(structure)), matrix_rep_(std::move(matrix_rep)) {
    const std::size_t n = labels_.size();
    if (structure_.size() != n * n) throw std::invalid_argument("structure tensor has wrong size");
    for (const auto& v : structure_)
      for (const auto& [k, z] : v)
        if (k >= n) throw std::invalid_argument("structure constant index out of range");
    if (!matrix_rep_.empty()) {
      if (matrix_rep_.size() != n) throw std::invalid_argument("matrix_rep size differs from dimension");
      coords_ = std::make_shared<const MatrixCoordinates>(matrix_rep_);
    }
  }

  /// Structure constants computed from commutators of the given matrices.
  static LieAlgebra from_matrices(std::vector<std::string> labels, std::vector<QiMatrix> basis) {
    const std::size_t n = basis.size();
    if (labels.size() != n) throw std::invalid_argument("label count differs from basis size");
    auto coords = std::make_shared<const MatrixCoordinates>(basis);
    std::vector<SparseVector> sparse_entries;
    sparse_entries.reserve(n);
    for (const auto& m : basis) sparse_entries.push_back(nonzeros(m));
    std::vector<SparseVector> structure(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        QiMatrix c = sparse_commutator(sparse_entries[i], sparse_entries[j], basis[i].rows());
        auto x = coords->coordinates(c);
        if (!x) throw std::logic_error("matrix basis is not closed under the commutator");
        structure[i * n + j] = qi::to_sparse(*x);
        SparseVector neg = structure[i * n + j];
        for (auto& [k, z] : neg) z = -z;
        structure[j * n + i] = std::move(neg);
      }
    }
    LieAlgebra g(std::move(labels), std::move(structure), {});
    g.matrix_rep_ = std::move(basis);
    g.coords_ = std::move(coords);
    return g;
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t k) const { return labels_.at(k); }
  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
      if (labels_[k] == label) return k;
    return std::nullopt;
  }

  /// Coordinates of [e_i, e_j].
  const SparseVector& structure(std::size_t i, std::size_t j) const { return structure_[i * dim() + j]; }

  bool has_matrix_rep() const { return !matrix_rep_.empty(); }
  const std::vector<QiMatrix>& matrix_rep() const { return matrix_rep_; }

  Vector basis_vector(std::size_t k) const { return qi::unit_vector(dim(), k); }
  Vector basis_vector(const std::string& label) const {
    auto k = index_of(label);
    if (!k) throw std::invalid_argument("unknown basis label " + label);
    return basis_vector(*k);
  }

  SparseVector bracket(const SparseVector& x, const SparseVector& y) const {
    SparseVector out;
    for (const auto& [i, a] : x) {
      if (i >= dim()) throw std::invalid_argument("bracket: index out of range");
      for (const auto& [j, b] : y) {
        if (j >= dim()) throw std::invalid_argument("bracket: index out of range");
        const SparseVector& c = structure(i, j);
        if (!c.empty()) out = qi::axpy(out, a * b, c);
      }
    }
    return out;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket: dimension mismatch");
    return qi::to_dense(bracket(qi::to_sparse(x), qi::to_sparse(y)), dim());
  }

  /// Σ x_k M_k in the matrix realization.
  QiMatrix to_matrix(const Vector& x) const {
    require_matrix_rep();
    if (x.size() != dim()) throw std::invalid_argument("to_matrix: dimension mismatch");
    QiMatrix m(matrix_rep_.front().rows(), matrix_rep_.front().cols());
    for (std::size_t k = 0; k < dim(); ++k)
      if (!x[k].is_zero()) m += matrix_rep_[k] * x[k];
    return m;
  }

  /// Coordinates of a matrix in the realization, if it lies in the algebra.
  std::optional<Vector> from_matrix(const QiMatrix& m) const {
    require_matrix_rep();
    return coords_->coordinates(m);
  }

  /// ad(x) as a dim × dim matrix acting on coordinate columns.
  QiMatrix ad(const Vector& x) const {
    QiMatrix a(dim(), dim());
    SparseVector xs = qi::to_sparse(x);
    for (std::size_t j = 0; j < dim(); ++j) {
      SparseVector col = bracket(xs, SparseVector{{j, GaussianRational(1)}});
      for (const auto& [i, z] : col) a(i, j) = z;
    }
    return a;
  }

 private:
  void require_matrix_rep() const {
    if (matrix_rep_.empty()) throw std::logic_error("Lie algebra has no matrix realization");
  }

  using Entries = std::vector<std::pair<std::size_t, GaussianRational>>;

  static SparseVector nonzeros(const QiMatrix& m) {
    SparseVector s;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) s.emplace_back(r * m.cols() + c, m(r, c));
    return s;
  }

  static QiMatrix sparse_commutator(const SparseVector& a, const SparseVector& b, std::size_t n) {
    QiMatrix c(n, n);
    for (const auto& [ka, za] : a) {
      std::size_t ar = ka / n, ac = ka % n;
      for (const auto& [kb, zb] : b) {
        std::size_t br = kb / n, bc = kb % n;
        if (ac == br) c(ar, bc) += za * zb;
        if (bc == ar) c(br, ac) -= zb * za;
      }
    }
    return c;
  }

  std::vector<std::string> labels_;
  std::vector<SparseVector> structure_;
  std::vector<QiMatrix> matrix_rep_;
  std::shared_ptr<const MatrixCoordinates> coords_;
};

/// First basis triple violating the Jacobi identity, if any.
struct JacobiViolation {
  std::size_t i, j, k;
};

inline std::optional<std::pair<std::size_t, std::size_t>> find_antisymmetry_violation(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      SparseVector s = qi::axpy(g.structure(i, j), GaussianRational(1), g.structure(j, i));
      if (!s.empty()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

/// Exhaustive over all ordered basis triples.
inline std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto e = [](std::size_t k) { return SparseVector{{k, GaussianRational(1)}}; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& ij = g.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector sum = g.bracket(ij, e(k));
        sum = qi::axpy(sum, GaussianRational(1), g.bracket(g.structure(j, k), e(i)));
        sum = qi::axpy(sum, GaussianRational(1), g.bracket(g.structure(k, i), e(j)));
        if (!sum.empty()) return JacobiViolation{i, j, k};
      }
    }
  return std::nullopt;
}

/// First basis pair whose matrix commutator disagrees with the structure
/// tensor.
inline std::optional<std::pair<std::size_t, std::size_t>> find_matrix_rep_violation(const LieAlgebra& g) {
  if (!g.has_matrix_rep()) return std::nullopt;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      QiMatrix c = qi::commutator(g.matrix_rep()[i], g.matrix_rep()[j]);
      if (!(c == g.to_matrix(qi::to_dense(g.structure(i, j), g.dim())))) return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace subreg::lie
