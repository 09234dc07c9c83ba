#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/lie/certificate.hpp"
#include "subreg/lie/subalgebra.hpp"
#include "subreg/lie/subspace.hpp"
#include "subreg/qi/linalg.hpp"
#include "subreg/qi/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::lie {

/// {x ∈ W : [x, S] ⊆ S}: coefficients a with Σ a_i C·[w_i, b_j] = 0 for
/// every basis vector b_j of S and every annihilator row C of S.
inline Subspace normalizer_in(const LieAlgebra& g, const Subspace& w, const Subspace& s) {
  if (!w.is_complex() || !s.is_complex()) throw std::invalid_argument("normalizer_in expects complex subspaces");
  if (w.ambient_dim() != g.dim() || s.ambient_dim() != g.dim())
    throw std::invalid_argument("normalizer_in: dimension mismatch");
  auto wrows = w.storage_rows();
  auto srows = s.storage_rows();
  auto ann = s.annihilator();
  const std::size_t m = wrows.size();
  // brackets[i][j] = [w_i, b_j]
  std::vector<std::vector<SparseVector>> brackets(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& b : srows) brackets[i].push_back(g.bracket(wrows[i], b));
  qi::SparseMatrix sys{m, {}};
  for (std::size_t j = 0; j < srows.size(); ++j)
    for (const auto& c : ann) {
      SparseVector row;
      for (std::size_t i = 0; i < m; ++i) {
        GaussianRational acc;
        for (const auto& [k, z] : brackets[i][j])
          if (const auto* ck = qi::find_entry(c, k)) acc += *ck * z;
        if (!acc.is_zero()) row.emplace_back(i, acc);
      }
      if (!row.empty()) sys.rows.push_back(std::move(row));
    }
  std::vector<Vector> gens;
  for (const auto& a : qi::nullspace(sys)) {
    SparseVector x;
    for (const auto& [i, z] : a) x = qi::axpy(x, z, wrows[i]);
    gens.push_back(qi::to_dense(x, g.dim()));
  }
  return Subspace::span(g.dim(), gens);
}

/// dim(cartan) − dim(normalizer of S inside cartan).
inline std::size_t subregular_codim(const LieAlgebra& g, const Subspace& cartan, const Subspace& s) {
  return cartan.dim() - normalizer_in(g, cartan, s).dim();
}

/// Gram matrix of the Killing form of an abstract algebra in its basis,
/// κ_ij = Σ_{l,k} c_{il}^k c_{jk}^l.
inline QiMatrix killing_matrix(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  QiMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      GaussianRational acc;
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& [kk, c] : a.structure(i, l))
          if (const auto* d = qi::find_entry(a.structure(j, kk), l)) acc += c * *d;
      k(i, j) = acc;
      k(j, i) = acc;
    }
  return k;
}

/// κ(x, y) = Trace(ad x ∘ ad y) on g.
inline GaussianRational killing_form(const LieAlgebra& g, const Vector& x, const Vector& y) {
  return (g.ad(x) * g.ad(y)).trace();
}

/// Derived series x ↦ [x, x] reaches 0.
inline bool is_solvable(const LieAlgebra& g, Subspace s) {
  while (s.dim() > 0) {
    Subspace next = bracket_span(g, s, s);
    if (next.dim() == s.dim()) return false;
    s = std::move(next);
  }
  return true;
}

/// [a, b] ⊆ b.
inline bool brackets_into(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  for (const auto& x : a.storage_rows())
    for (const auto& y : b.storage_rows())
      if (!b.echelon().contains(g.bracket(x, y))) return false;
  return true;
}

/// Radical of a subalgebra S as [S,S]^⊥ under S's own Killing form.
inline Subspace radical(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s).verified()) throw std::invalid_argument("radical: not a subalgebra");
  LieAlgebra sub = restrict_to(g, s);
  const std::size_t m = sub.dim();
  QiMatrix k = killing_matrix(sub);
  Subspace full = Subspace::full(m);
  Subspace derived = bracket_span(sub, full, full);
  qi::SparseMatrix sys{m, {}};
  for (const auto& d : derived.storage_rows()) {
    SparseVector row;
    for (std::size_t c = 0; c < m; ++c) {
      GaussianRational acc;
      for (const auto& [r, z] : d) acc += z * k(r, c);
      if (!acc.is_zero()) row.emplace_back(c, acc);
    }
    sys.rows.push_back(std::move(row));
  }
  auto basis = s.storage_rows();
  std::vector<Vector> gens;
  for (const auto& a : qi::nullspace(sys)) {
    SparseVector x;
    for (const auto& [i, z] : a) x = qi::axpy(x, z, basis[i]);
    gens.push_back(qi::to_dense(x, g.dim()));
  }
  Subspace rad = Subspace::span(g.dim(), gens);
  if (!brackets_into(g, s, rad)) throw std::logic_error("radical is not an ideal");
  if (!is_solvable(g, rad)) throw std::logic_error("radical is not solvable");
  return rad;
}

/// Searches the radical's basis, then pairwise sums of basis vectors, for
/// x ∈ rad(S) whose nilpotent Jordan part lies outside S. A hit means S is
/// normalized by no Cartan subalgebra; a miss proves nothing.
inline Certificate nonregularity_certificate(const LieAlgebra& g, const Subspace& s) {
  if (!g.has_matrix_rep()) throw std::logic_error("nonregularity_certificate requires a matrix realization");
  Subspace rad = radical(g, s);
  Certificate c{"some radical element has its nilpotent Jordan part outside the subalgebra", Status::refuted,
                Json::object(), ""};
  c.witness["radical_dim"] = rad.dim();
  auto basis = rad.basis();
  auto test = [&](const Vector& x) -> bool {
    auto jc = qi::jordan_chevalley(g.to_matrix(x));
    auto nil = g.from_matrix(jc.nilpotent);
    auto semi = g.from_matrix(jc.semisimple);
    if (!nil || !semi) throw std::logic_error("Jordan parts left the matrix realization");
    if (s.contains(*nil)) return false;
    c.status = Status::verified;
    c.witness["x"] = labeled_vector_json(g.labels(), x);
    c.witness["semisimple_part"] = labeled_vector_json(g.labels(), *semi);
    c.witness["nilpotent_part"] = labeled_vector_json(g.labels(), *nil);
    c.details = "x lies in the radical but its nilpotent part does not lie in the subalgebra";
    return true;
  };
  for (const auto& x : basis)
    if (test(x)) return c;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (test(basis[i] + basis[j])) return c;
  c.details = "no witness found among radical basis vectors and their pairwise sums";
  return c;
}

}  // namespace subreg::lie
