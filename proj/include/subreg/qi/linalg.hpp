#pragma once

#include "subreg/qi/echelon.hpp"
#include "subreg/qi/matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace subreg::qi {

struct RrefResult {
  QiMatrix matrix;                  // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

inline EchelonBasis echelon_of(const SparseMatrix& m) {
  EchelonBasis e(m.cols);
  for (const auto& r : m.rows) e.insert(r);
  return e;
}

inline EchelonBasis echelon_of(const QiMatrix& m) {
  EchelonBasis e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(to_sparse(m.row(r)));
  return e;
}

inline RrefResult rref(const QiMatrix& m) {
  EchelonBasis e = echelon_of(m);
  RrefResult out{QiMatrix(m.rows(), m.cols()), e.pivot_columns()};
  std::size_t r = 0;
  for (const auto& row : e.rows()) {
    for (const auto& [c, z] : row) out.matrix(r, c) = z;
    ++r;
  }
  return out;
}

inline std::size_t rank(const QiMatrix& m) { return echelon_of(m).rank(); }
inline std::size_t rank(const SparseMatrix& m) { return echelon_of(m).rank(); }

/// Basis of {x : m·x = 0}, one vector per free column.
inline std::vector<Vector> nullspace(const QiMatrix& m) {
  std::vector<Vector> out;
  for (const auto& v : echelon_of(m).nullspace()) out.push_back(to_dense(v, m.cols()));
  return out;
}

inline std::vector<SparseVector> nullspace(const SparseMatrix& m) { return echelon_of(m).nullspace(); }

/// Solution set of a·X = B: X = particular + (any combination of nullspace
/// vectors in each column).
struct Solution {
  QiMatrix particular;             // a.cols × b.cols, free variables set to zero
  std::vector<Vector> nullspace;   // basis of ker a
};

namespace detail {

inline SparseVector augmented_row(std::span<const GaussianRational> a_row, std::span<const GaussianRational> b_row) {
  SparseVector r = to_sparse(a_row);
  for (std::size_t k = 0; k < b_row.size(); ++k)
    if (!b_row[k].is_zero()) r.emplace_back(a_row.size() + k, b_row[k]);
  return r;
}

}  // namespace detail

/// Returns nothing when the system is inconsistent (rank a < rank [a|b]).
inline std::optional<Solution> solve(const QiMatrix& a, const QiMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: a.rows != b.rows");
  const std::size_t n = a.cols();
  EchelonBasis e(n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) e.insert(detail::augmented_row(a.row(r), b.row(r)));
  Solution s{QiMatrix(n, b.cols()), {}};
  for (const auto& [pc, row] : e.pivot_map()) {
    if (pc >= n) return std::nullopt;
    for (const auto& [c, z] : row)
      if (c >= n) s.particular(pc, c - n) = z;
  }
  EchelonBasis left(n);
  for (const auto& [pc, row] : e.pivot_map()) {
    SparseVector trimmed;
    for (const auto& entry : row)
      if (entry.first < n) trimmed.push_back(entry);
    left.insert(trimmed);
  }
  for (const auto& v : left.nullspace()) s.nullspace.push_back(to_dense(v, n));
  return s;
}

/// Sparse single right-hand-side variant: a·x = rhs.
struct SparseSolution {
  Vector particular;
  std::vector<SparseVector> nullspace;
};

inline std::optional<SparseSolution> solve(const SparseMatrix& a, const Vector& rhs) {
  if (a.rows.size() != rhs.size()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t n = a.cols;
  EchelonBasis e(n + 1);
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    SparseVector row = a.rows[r];
    if (!rhs[r].is_zero()) row.emplace_back(n, rhs[r]);
    e.insert(row);
  }
  SparseSolution s{Vector(n), {}};
  EchelonBasis left(n);
  for (const auto& [pc, row] : e.pivot_map()) {
    if (pc >= n) return std::nullopt;
    SparseVector trimmed;
    for (const auto& [c, z] : row) {
      if (c == n)
        s.particular[pc] = z;
      else
        trimmed.emplace_back(c, z);
    }
    left.insert(trimmed);
  }
  s.nullspace = left.nullspace();
  return s;
}

inline GaussianRational det(const QiMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = m.rows();
  QiMatrix a = m;
  GaussianRational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return GaussianRational(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      d = -d;
    }
    d *= a(c, c);
    GaussianRational inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      GaussianRational f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!a(c, k).is_zero()) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

/// Exact inverse; throws std::domain_error when singular.
inline QiMatrix inverse(const QiMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  auto s = solve(m, QiMatrix::identity(m.rows()));
  if (!s || !s->nullspace.empty()) throw std::domain_error("singular matrix");
  return s->particular;
}

inline QiMatrix power(const QiMatrix& m, std::size_t k) {
  QiMatrix out = QiMatrix::identity(m.rows());
  for (std::size_t j = 0; j < k; ++j) out = out * m;
  return out;
}

}  // namespace subreg::qi
