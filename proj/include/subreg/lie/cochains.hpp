#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/qi/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace subreg::lie {

/// Increasing k-subsets of {0, …, n−1} in lexicographic order; subset J
/// stands for the dual wedge monomial e_{J0}* ∧ … ∧ e_{Jk−1}*.
class WedgeBasis {
 public:
  WedgeBasis(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (n >= (1u << 16)) throw std::length_error("wedge basis: dimension too large");
    if (k > 4) throw std::length_error("wedge basis: degree too large");
    std::vector<std::size_t> cur;
    enumerate(0, cur);
    for (std::size_t idx = 0; idx < subsets_.size(); ++idx) index_.emplace(pack(subsets_[idx]), idx);
  }

  std::size_t n() const { return n_; }
  std::size_t degree() const { return k_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<std::size_t>& subset(std::size_t idx) const { return subsets_[idx]; }

  /// Index of an increasing subset.
  std::size_t index_of(const std::vector<std::size_t>& sorted) const { return index_.at(pack(sorted)); }

 private:
  void enumerate(std::size_t start, std::vector<std::size_t>& cur) {
    if (cur.size() == k_) {
      subsets_.push_back(cur);
      return;
    }
    for (std::size_t x = start; x < n_; ++x) {
      cur.push_back(x);
      enumerate(x + 1, cur);
      cur.pop_back();
    }
  }
  static std::uint64_t pack(const std::vector<std::size_t>& s) {
    std::uint64_t key = 0;
    for (std::size_t x : s) key = (key << 16) | static_cast<std::uint64_t>(x);
    return key;
  }

  std::size_t n_, k_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Matrix of d: Λ^k S* → Λ^{k+1} S* with trivial coefficients,
/// (dφ)(x_0..x_k) = Σ_{a<b} (−1)^{a+b} φ([x_a,x_b], x_0..x̂_a..x̂_b..x_k).
/// Rows index (k+1)-subsets, columns k-subsets.
inline qi::SparseMatrix cochain_differential(const LieAlgebra& s, std::size_t k) {
  const std::size_t n = s.dim();
  WedgeBasis src(n, k);
  WedgeBasis dst(n, k + 1);
  qi::SparseMatrix d{src.size(), {}};
  d.rows.reserve(dst.size());
  std::vector<std::size_t> rest;
  std::vector<std::size_t> merged;
  for (std::size_t row = 0; row < dst.size(); ++row) {
    const auto& J = dst.subset(row);
    std::vector<std::pair<std::size_t, GaussianRational>> entries;
    for (std::size_t a = 0; a < J.size(); ++a)
      for (std::size_t b = a + 1; b < J.size(); ++b) {
        const SparseVector& br = s.structure(J[a], J[b]);
        if (br.empty()) continue;
        rest.clear();
        for (std::size_t t = 0; t < J.size(); ++t)
          if (t != a && t != b) rest.push_back(J[t]);
        bool odd_ab = ((a + b) % 2) == 1;
        for (const auto& [m, coeff] : br) {
          if (std::binary_search(rest.begin(), rest.end(), m)) continue;
          auto pos = static_cast<std::size_t>(std::lower_bound(rest.begin(), rest.end(), m) - rest.begin());
          merged = rest;
          merged.insert(merged.begin() + static_cast<std::ptrdiff_t>(pos), m);
          bool negative = odd_ab != ((pos % 2) == 1);
          entries.emplace_back(src.index_of(merged), negative ? -coeff : coeff);
        }
      }
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector combined;
    for (auto& [c, z] : entries) {
      if (!combined.empty() && combined.back().first == c)
        combined.back().second += z;
      else
        combined.emplace_back(c, std::move(z));
    }
    std::erase_if(combined, [](const auto& e) { return e.second.is_zero(); });
    d.rows.push_back(std::move(combined));
  }
  return d;
}

}  // namespace subreg::lie
