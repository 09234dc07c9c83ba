#pragma once

#include "subreg/qi/echelon.hpp"
#include "subreg/qi/linalg.hpp"
#include "subreg/qi/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::lie {

using qi::GaussianRational;
using qi::QiMatrix;
using qi::SparseVector;
using qi::Vector;

enum class FieldTag { complex, real_rational };

inline std::string to_string(FieldTag f) { return f == FieldTag::complex ? "complex" : "real-rational"; }

/// Subspace of the coordinate space of an algebra, stored by its reduced
/// row-echelon basis.
///
/// Complex subspaces live in C^d. Real-rational subspaces live in Q^{2d}:
/// the vector a + i·b of C^d is stored as (a, b), so real spans of complex
/// vectors stay exact.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim, FieldTag field = FieldTag::complex) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.field_ = field;
    s.echelon_ = qi::EchelonBasis(s.coordinate_length());
    return s;
  }

  static Subspace full(std::size_t ambient_dim) {
    Subspace s = zero(ambient_dim);
    for (std::size_t k = 0; k < ambient_dim; ++k) s.echelon_.insert({{k, GaussianRational(1)}});
    return s;
  }

  /// Complex span of ambient vectors, or (real tag) real span of possibly
  /// complex ambient vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors,
                       FieldTag field = FieldTag::complex) {
    Subspace s = zero(ambient_dim, field);
    for (const auto& v : vectors) {
      if (v.size() != ambient_dim) throw std::invalid_argument("span: vector length differs from ambient dimension");
      s.echelon_.insert(field == FieldTag::complex ? qi::to_sparse(v) : double_up(v));
    }
    return s;
  }

  /// Span of rows already in storage coordinates (length 2d for real tag).
  static Subspace from_storage_rows(std::size_t ambient_dim, FieldTag field, const std::vector<SparseVector>& rows) {
    Subspace s = zero(ambient_dim, field);
    for (const auto& r : rows) {
      for (const auto& [c, z] : r) {
        if (c >= s.coordinate_length()) throw std::invalid_argument("subspace row index out of range");
        if (field == FieldTag::real_rational && !z.is_real())
          throw std::invalid_argument("real-rational subspace row has a non-real entry");
      }
      s.echelon_.insert(r);
    }
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  FieldTag field() const { return field_; }
  bool is_complex() const { return field_ == FieldTag::complex; }
  std::size_t dim() const { return echelon_.rank(); }
  std::size_t coordinate_length() const { return is_complex() ? ambient_ : 2 * ambient_; }

  const qi::EchelonBasis& echelon() const { return echelon_; }
  std::vector<SparseVector> storage_rows() const { return echelon_.rows(); }
  std::vector<std::size_t> pivots() const { return echelon_.pivot_columns(); }

  /// Basis as ambient complex vectors (real tag: a + i·b recombined).
  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (const auto& r : echelon_.rows()) out.push_back(to_ambient(r));
    return out;
  }

  Vector basis_vector(std::size_t k) const { return basis().at(k); }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains: vector length mismatch");
    return echelon_.contains(is_complex() ? qi::to_sparse(v) : double_up(v));
  }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (const auto& r : other.storage_rows())
      if (!echelon_.contains(r)) return false;
    return true;
  }

  /// Coordinates with respect to basis() (complex tag only).
  std::optional<Vector> coordinates(const Vector& v) const {
    require_complex("coordinates");
    return echelon_.coordinates(qi::to_sparse(v));
  }
  std::optional<Vector> coordinates(const SparseVector& v) const {
    require_complex("coordinates");
    return echelon_.coordinates(v);
  }

  /// Rows of a matrix C with {v : C·v = 0} equal to this subspace, in
  /// storage coordinates.
  std::vector<SparseVector> annihilator() const {
    std::vector<SparseVector> rows;
    const std::size_t len = coordinate_length();
    std::vector<bool> is_pivot(len, false);
    for (std::size_t p : pivots()) is_pivot[p] = true;
    std::vector<SparseVector> by_col(len);
    for (const auto& [pc, row] : echelon_.pivot_map())
      for (const auto& [c, z] : row)
        if (c != pc) by_col[c].emplace_back(pc, -z);
    for (std::size_t c = 0; c < len; ++c) {
      if (is_pivot[c]) continue;
      SparseVector r = by_col[c];
      r.emplace_back(c, GaussianRational(1));
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(r));
    }
    return rows;
  }

  void check_compatible(const Subspace& other) const {
    if (ambient_ != other.ambient_ || field_ != other.field_)
      throw std::invalid_argument("subspaces have different ambient spaces or field tags");
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.storage_rows() == b.storage_rows();
  }

  /// (a, b) ↦ a + i·b for a storage row of a real subspace.
  Vector to_ambient(const SparseVector& row) const {
    if (is_complex()) return qi::to_dense(row, ambient_);
    Vector v(ambient_);
    for (const auto& [c, z] : row) {
      if (c < ambient_)
        v[c] += z;
      else
        v[c - ambient_] += z * GaussianRational::i();
    }
    return v;
  }

  static SparseVector double_up(const Vector& v) {
    SparseVector re, im;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!qi::is_zero(v[k].re())) re.emplace_back(k, GaussianRational(v[k].re()));
      if (!qi::is_zero(v[k].im())) im.emplace_back(v.size() + k, GaussianRational(v[k].im()));
    }
    re.insert(re.end(), im.begin(), im.end());
    return re;
  }

 private:
  void require_complex(const char* what) const {
    if (!is_complex()) throw std::logic_error(std::string(what) + " requires a complex subspace");
  }

  std::size_t ambient_ = 0;
  FieldTag field_ = FieldTag::complex;
  qi::EchelonBasis echelon_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.check_compatible(b);
  std::vector<SparseVector> rows = a.storage_rows();
  for (auto& r : b.storage_rows()) rows.push_back(std::move(r));
  return Subspace::from_storage_rows(a.ambient_dim(), a.field(), rows);
}

/// Intersection as the nullspace of the stacked annihilators; checks the
/// dimension formula against sum().
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  a.check_compatible(b);
  qi::SparseMatrix constraints{a.coordinate_length(), a.annihilator()};
  for (auto& r : b.annihilator()) constraints.rows.push_back(std::move(r));
  Subspace out = Subspace::from_storage_rows(a.ambient_dim(), a.field(), qi::nullspace(constraints));
  if (a.dim() + b.dim() != sum(a, b).dim() + out.dim())
    throw std::logic_error("dimension formula violated in intersect");
  return out;
}

/// Real points of a complex subspace viewed as a real-rational subspace
/// (S ↦ S as a 2·dim real space).
inline Subspace realify(const Subspace& s) {
  if (!s.is_complex()) return s;
  std::vector<Vector> gens;
  for (const auto& v : s.basis()) {
    gens.push_back(v);
    gens.push_back(GaussianRational::i() * v);
  }
  return Subspace::span(s.ambient_dim(), gens, FieldTag::real_rational);
}

}  // namespace subreg::lie
