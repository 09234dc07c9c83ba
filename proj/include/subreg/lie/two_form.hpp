#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/lie/certificate.hpp"
#include "subreg/lie/cochains.hpp"
#include "subreg/lie/subalgebra.hpp"
#include "subreg/lie/subspace.hpp"
#include "subreg/qi/linalg.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subreg::lie {

/// Antisymmetric bilinear form on a subalgebra S, as the matrix
/// ω(b_i, b_j) in S's echelon basis.
struct TwoForm {
  Subspace domain;
  QiMatrix matrix;

  static TwoForm zero(const Subspace& s) { return {s, QiMatrix(s.dim(), s.dim())}; }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j)
        if (matrix(i, j) != -matrix(j, i)) return false;
    return true;
  }

  /// ω(x, y) for ambient vectors x, y ∈ S.
  GaussianRational operator()(const Vector& x, const Vector& y) const {
    auto cx = domain.coordinates(x);
    auto cy = domain.coordinates(y);
    if (!cx || !cy) throw std::invalid_argument("two-form evaluated outside its domain");
    return evaluate_coords(*cx, *cy);
  }

  GaussianRational evaluate_coords(const Vector& cx, const Vector& cy) const {
    GaussianRational acc;
    for (std::size_t i = 0; i < cx.size(); ++i) {
      if (cx[i].is_zero()) continue;
      for (std::size_t j = 0; j < cy.size(); ++j)
        if (!cy[j].is_zero() && !matrix(i, j).is_zero()) acc += cx[i] * matrix(i, j) * cy[j];
    }
    return acc;
  }
};

/// Upper-triangle entries in wedge-basis order (the 2-cochain of ω).
inline Vector cochain_of(const TwoForm& w) {
  const std::size_t n = w.matrix.rows();
  Vector c;
  c.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.push_back(w.matrix(i, j));
  return c;
}

inline TwoForm two_form_from_cochain(const Subspace& s, const Vector& c) {
  const std::size_t n = s.dim();
  if (c.size() != n * (n - (n > 0 ? 1 : 0)) / 2) throw std::invalid_argument("2-cochain length mismatch");
  TwoForm w = TwoForm::zero(s);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      w.matrix(i, j) = c[k];
      w.matrix(j, i) = -c[k];
      ++k;
    }
  return w;
}

/// dω(x,y,z) = −ω([x,y],z) + ω([x,z],y) − ω([y,z],x) on the increasing basis
/// triples of S, in wedge order.
inline Vector two_form_d(const LieAlgebra& g, const Subspace& s, const TwoForm& w) {
  if (!(w.domain == s)) throw std::invalid_argument("two_form_d: form is defined on a different subspace");
  LieAlgebra sub = restrict_to(g, s);
  return cochain_differential(sub, 2).apply(cochain_of(w));
}

inline Certificate is_closed(const LieAlgebra& g, const TwoForm& w) {
  Vector dw = two_form_d(g, w.domain, w);
  Certificate c{"two-form is closed", Status::verified, Json::object(), ""};
  WedgeBasis triples(w.domain.dim(), 3);
  for (std::size_t k = 0; k < dw.size(); ++k) {
    if (dw[k].is_zero()) continue;
    const auto& t = triples.subset(k);
    c.status = Status::refuted;
    c.witness["triple"] = {t[0], t[1], t[2]};
    c.witness["value"] = value_json(dw[k]);
    c.details = "d(omega) is nonzero on a basis triple";
    return c;
  }
  c.witness["triples_checked"] = dw.size();
  c.details = "d(omega) vanishes on every basis triple";
  return c;
}

/// dξ(b_i, b_j) = −ξ([b_i, b_j]) for a functional ξ given by its values on
/// S's basis.
inline TwoForm coboundary(const LieAlgebra& g, const Subspace& s, const Vector& xi) {
  if (xi.size() != s.dim()) throw std::invalid_argument("coboundary: functional length mismatch");
  LieAlgebra sub = restrict_to(g, s);
  return two_form_from_cochain(s, cochain_differential(sub, 1).apply(xi));
}

/// Coordinates of each basis vector of a real subspace V with respect to
/// the complex domain S.
inline std::vector<Vector> domain_coordinates(const Subspace& domain, const Subspace& v) {
  if (v.is_complex()) throw std::invalid_argument("expected a real-rational subspace");
  std::vector<Vector> out;
  for (const auto& x : v.basis()) {
    auto c = domain.coordinates(x);
    if (!c) throw std::invalid_argument("real subspace is not contained in the form's domain");
    out.push_back(std::move(*c));
  }
  return out;
}

/// Complex values ω(v_a, v_b) on the real basis of V.
inline QiMatrix restrict_values(const TwoForm& w, const Subspace& v) {
  auto coords = domain_coordinates(w.domain, v);
  const std::size_t m = coords.size();
  QiMatrix r(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      r(a, b) = w.evaluate_coords(coords[a], coords[b]);
      r(b, a) = -r(a, b);
    }
  return r;
}

/// Matrix of Im ω(v_a, v_b) on the real basis of V.
inline QiMatrix restrict_im(const TwoForm& w, const Subspace& v) {
  QiMatrix vals = restrict_values(w, v);
  QiMatrix im(vals.rows(), vals.cols());
  for (std::size_t a = 0; a < vals.rows(); ++a)
    for (std::size_t b = 0; b < vals.cols(); ++b) im(a, b) = GaussianRational(vals(a, b).im());
  return im;
}

/// Non-degeneracy of a square form matrix; the empty form counts as
/// non-degenerate.
inline Certificate is_nondegenerate(const QiMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("is_nondegenerate expects a square matrix");
  GaussianRational d = qi::det(m);
  Certificate c{"form of size " + std::to_string(m.rows()) + " is non-degenerate", status_of(!d.is_zero()), Json::object(), ""};
  c.witness["size"] = m.rows();
  c.witness["determinant"] = value_json(d);
  c.witness["matrix"] = matrix_json(m);
  if (m.rows() % 2 == 1)
    c.details = "odd size: antisymmetric forms are always degenerate";
  else
    c.details = d.is_zero() ? "determinant vanishes" : "determinant is nonzero";
  return c;
}

/// A closed ω on S with ω(v_a, v_b) = target(a, b) on V's basis: the
/// particular solution (free variables zero, lexicographic pair order) of
/// {dω = 0} ∪ {ω|V = target}.
inline std::optional<TwoForm> solve_closed_extension(const LieAlgebra& g, const Subspace& s, const Subspace& v,
                                                     const QiMatrix& target) {
  auto coords = domain_coordinates(s, v);
  const std::size_t m = coords.size();
  if (target.rows() != m || target.cols() != m) throw std::invalid_argument("target size differs from dim V");
  LieAlgebra sub = restrict_to(g, s);
  const std::size_t n = s.dim();
  WedgeBasis pairs(n, 2);
  qi::SparseMatrix sys{pairs.size(), {}};
  Vector rhs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      // ω(v_a, v_b) = Σ_{i<j} ω_ij (c_a^i c_b^j − c_a^j c_b^i)
      SparseVector row;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& ij = pairs.subset(p);
        GaussianRational z = coords[a][ij[0]] * coords[b][ij[1]] - coords[a][ij[1]] * coords[b][ij[0]];
        if (!z.is_zero()) row.emplace_back(p, std::move(z));
      }
      sys.rows.push_back(std::move(row));
      rhs.push_back(target(a, b));
    }
  qi::SparseMatrix d2 = cochain_differential(sub, 2);
  for (auto& r : d2.rows) {
    if (r.empty()) continue;
    sys.rows.push_back(std::move(r));
    rhs.emplace_back(0);
  }
  auto sol = qi::solve(sys, rhs);
  if (!sol) return std::nullopt;
  return two_form_from_cochain(s, sol->particular);
}

/// ω_c(x, y) = Trace(M_c · [x, y]) with M_c = c·(E_12 − E_21) in the matrix
/// realization; defined on the whole algebra.
inline TwoForm trace_form(const GaussianRational& c, const LieAlgebra& g) {
  if (!g.has_matrix_rep()) throw std::logic_error("trace_form requires a matrix realization");
  const std::size_t size = g.matrix_rep().front().rows();
  if (size < 2) throw std::invalid_argument("trace_form requires matrices of size at least 2");
  QiMatrix mc(size, size);
  mc(0, 1) = c;
  mc(1, 0) = -c;
  Subspace full = Subspace::full(g.dim());
  TwoForm w = TwoForm::zero(full);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      QiMatrix br = g.to_matrix(qi::to_dense(g.structure(i, j), g.dim()));
      w.matrix(i, j) = (mc * br).trace();
      w.matrix(j, i) = -w.matrix(i, j);
    }
  return w;
}

}  // namespace subreg::lie
