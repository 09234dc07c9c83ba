#pragma once

#include "subreg/qi/gaussian_rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace subreg::qi {

using Vector = std::vector<GaussianRational>;

/// Sorted (column, value) list with no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, GaussianRational>>;

/// Dense row-major matrix over Q(i).
class QiMatrix {
 public:
  QiMatrix() = default;
  QiMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QiMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static QiMatrix identity(std::size_t n) {
    QiMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  static QiMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    QiMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const GaussianRational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  Vector col_vector(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& z) { return z.is_zero(); });
  }

  QiMatrix transpose() const {
    QiMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  QiMatrix conj() const {
    QiMatrix t(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = data_[k].conj();
    return t;
  }

  GaussianRational trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    GaussianRational t;
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
  }

  QiMatrix& operator+=(const QiMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  QiMatrix& operator-=(const QiMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  QiMatrix& operator*=(const GaussianRational& s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend QiMatrix operator+(QiMatrix a, const QiMatrix& b) { return a += b; }
  friend QiMatrix operator-(QiMatrix a, const QiMatrix& b) { return a -= b; }
  friend QiMatrix operator*(QiMatrix a, const GaussianRational& s) { return a *= s; }
  friend QiMatrix operator*(const GaussianRational& s, QiMatrix a) { return a *= s; }

  friend QiMatrix operator*(const QiMatrix& a, const QiMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    QiMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const auto& y = b(k, c);
          if (!y.is_zero()) p(r, c) += x * y;
        }
      }
    return p;
  }

  friend Vector operator*(const QiMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c)
        if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const QiMatrix& a, const QiMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const QiMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

inline QiMatrix commutator(const QiMatrix& a, const QiMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Vector helpers

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& z) { return z.is_zero(); });
}

inline Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}
inline Vector operator*(const GaussianRational& s, Vector a) {
  for (auto& z : a) z *= s;
  return a;
}
inline Vector conj(Vector a) {
  for (auto& z : a) z = z.conj();
  return a;
}

inline SparseVector to_sparse(std::span<const GaussianRational> v) {
  SparseVector s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) s.emplace_back(k, v[k]);
  return s;
}

inline Vector to_dense(const SparseVector& s, std::size_t n) {
  Vector v(n);
  for (const auto& [k, z] : s) v.at(k) = z;
  return v;
}

/// a + factor·b on sorted sparse vectors.
inline SparseVector axpy(const SparseVector& a, const GaussianRational& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      GaussianRational z = a[i].second + factor * b[j].second;
      if (!z.is_zero()) out.emplace_back(a[i].first, std::move(z));
      ++i;
      ++j;
    }
  }
  return out;
}

inline const GaussianRational* find_entry(const SparseVector& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

/// Row-sparse matrix; rows are SparseVectors over a fixed column count.
struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseVector> rows;

  std::size_t row_count() const { return rows.size(); }

  QiMatrix to_dense() const {
    QiMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, z] : rows[r]) m(r, c) = z;
    return m;
  }

  static SparseMatrix from_dense(const QiMatrix& m) {
    SparseMatrix s{m.cols(), {}};
    for (std::size_t r = 0; r < m.rows(); ++r) s.rows.push_back(to_sparse(m.row(r)));
    return s;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols) throw std::invalid_argument("sparse matrix-vector dimension mismatch");
    Vector out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, z] : rows[r])
        if (!v[c].is_zero()) out[r] += z * v[c];
    return out;
  }
};

/// Product a·b of sparse matrices.
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows.size()) throw std::invalid_argument("sparse product dimension mismatch");
  SparseMatrix p{b.cols, {}};
  p.rows.reserve(a.rows.size());
  for (const auto& row : a.rows) {
    SparseVector acc;
    for (const auto& [k, z] : row) acc = axpy(acc, z, b.rows[k]);
    p.rows.push_back(std::move(acc));
  }
  return p;
}

}  // namespace subreg::qi
