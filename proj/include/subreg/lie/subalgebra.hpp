#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/lie/certificate.hpp"
#include "subreg/lie/subspace.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subreg::lie {

/// First pair of basis vectors of S whose bracket leaves S.
inline std::optional<std::pair<std::size_t, std::size_t>> find_closure_violation(const LieAlgebra& g,
                                                                                  const Subspace& s) {
  auto rows = s.storage_rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!s.echelon().contains(g.bracket(rows[i], rows[j]))) return std::make_pair(i, j);
  return std::nullopt;
}

inline Certificate is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (!s.is_complex() || s.ambient_dim() != g.dim())
    throw std::invalid_argument("is_subalgebra expects a complex subspace of the algebra");
  Certificate c{"subspace of dimension " + std::to_string(s.dim()) + " is closed under the bracket",
                Status::verified, Json::object(), ""};
  c.witness["dim"] = s.dim();
  if (auto bad = find_closure_violation(g, s)) {
    auto basis = s.basis();
    c.status = Status::refuted;
    c.witness["x"] = labeled_vector_json(g.labels(), basis[bad->first]);
    c.witness["y"] = labeled_vector_json(g.labels(), basis[bad->second]);
    c.witness["bracket"] = labeled_vector_json(g.labels(), g.bracket(basis[bad->first], basis[bad->second]));
    c.details = "bracket of basis vectors " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                " is not in the subspace";
  } else {
    c.details = "all pairwise brackets of basis vectors lie in the subspace";
  }
  return c;
}

/// Label for the k-th echelon basis vector of S: the ambient label of its
/// pivot, suffixed with '~' when the vector is not a coordinate vector.
inline std::string subalgebra_label(const LieAlgebra& g, const SparseVector& row, std::size_t pivot) {
  std::string l = g.label(pivot);
  if (row.size() > 1) l += "~";
  return l;
}

/// S as an abstract Lie algebra in its canonical echelon basis. Throws when S
/// is not closed under the bracket.
inline LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s) {
  if (!s.is_complex() || s.ambient_dim() != g.dim())
    throw std::invalid_argument("restrict_to expects a complex subspace of the algebra");
  auto rows = s.storage_rows();
  auto piv = s.pivots();
  const std::size_t n = rows.size();
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(subalgebra_label(g, rows[k], piv[k]));
  std::vector<SparseVector> structure(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = s.coordinates(g.bracket(rows[i], rows[j]));
      if (!c) throw std::invalid_argument("restrict_to: subspace is not a subalgebra");
      structure[i * n + j] = qi::to_sparse(*c);
      SparseVector neg = structure[i * n + j];
      for (auto& [k, z] : neg) z = -z;
      structure[j * n + i] = std::move(neg);
    }
  std::vector<QiMatrix> rep;
  if (g.has_matrix_rep())
    for (const auto& v : s.basis()) rep.push_back(g.to_matrix(v));
  return LieAlgebra(std::move(labels), std::move(structure), std::move(rep));
}

/// Span of all brackets [x, y] with x ∈ a, y ∈ b.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  Subspace out = Subspace::zero(g.dim());
  std::vector<Vector> gens;
  auto ra = a.storage_rows();
  auto rb = b.storage_rows();
  for (const auto& x : ra)
    for (const auto& y : rb) {
      SparseVector z = g.bracket(x, y);
      if (!z.empty()) gens.push_back(qi::to_dense(z, g.dim()));
    }
  return Subspace::span(g.dim(), gens);
}

}  // namespace subreg::lie
