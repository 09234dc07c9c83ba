#pragma once

#include "subreg/qi/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace subreg::qi {

/// Incrementally maintained reduced row-echelon basis of a row space.
///
/// Every stored row has a leading 1 in its pivot column and zeros in all
/// other pivot columns, so the stored set is the unique RREF of the span of
/// everything inserted so far.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols = 0) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Residual of v after eliminating every pivot column.
  SparseVector reduce(const SparseVector& v) const {
    SparseVector r = v;
    for (const auto& [col, coeff] : v) {
      auto it = pivots_.find(col);
      if (it == pivots_.end()) continue;
      // Pivot rows vanish on the other pivot columns, so `coeff` is still the
      // entry of r at `col` when we get here.
      r = axpy(r, -coeff, it->second);
    }
    return r;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns true when it was independent.
  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    GaussianRational lead_inv = r.front().second.inverse();
    std::size_t col = r.front().first;
    for (auto& [c, z] : r) z *= lead_inv;
    for (auto& [pcol, prow] : pivots_) {
      if (const GaussianRational* e = find_entry(prow, col)) {
        GaussianRational f = -*e;
        prow = axpy(prow, f, r);
      }
    }
    pivots_.emplace(col, std::move(r));
    return true;
  }

  /// Rows ordered by pivot column.
  std::vector<SparseVector> rows() const {
    std::vector<SparseVector> out;
    out.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_) out.push_back(r);
    return out;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    out.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_) out.push_back(c);
    return out;
  }

  const std::map<std::size_t, SparseVector>& pivot_map() const { return pivots_; }

  /// Coordinates of v with respect to the stored rows (in pivot order), or
  /// nothing when v is outside the span.
  std::optional<Vector> coordinates(const SparseVector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c(pivots_.size());
    std::size_t k = 0;
    for (const auto& [col, row] : pivots_) {
      if (const GaussianRational* e = find_entry(v, col)) c[k] = *e;
      ++k;
    }
    return c;
  }

  /// Basis of {x : row·x = 0 for every stored row}, one vector per free
  /// column in increasing order.
  std::vector<SparseVector> nullspace() const {
    std::vector<SparseVector> basis;
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [c, r] : pivots_) is_pivot[c] = true;
    // Column view of the non-pivot entries.
    std::vector<SparseVector> by_free(cols_);
    for (const auto& [pc, row] : pivots_)
      for (const auto& [c, z] : row)
        if (c != pc) by_free[c].emplace_back(pc, -z);
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      SparseVector v = by_free[f];
      v.emplace_back(f, GaussianRational(1));
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseVector> pivots_;
};

}  // namespace subreg::qi
