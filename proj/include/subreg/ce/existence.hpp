#pragma once

#include "subreg/ce/cohomology.hpp"
#include "subreg/lie/certificate.hpp"
#include "subreg/lie/two_form.hpp"
#include "subreg/qi/multipoly.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace subreg::ce {

using qi::MultiPoly;
using qi::Rational;

/// Whether some closed ω on S has Im(ω|V) non-degenerate (V real, m = dim V).
///
/// Closed forms are parametrized as ω = Σ t_l z_l over a basis of ker d₂
/// (H² representatives "c", "c2", … first, then coboundaries dξ of dual
/// basis functionals). With t_l = u_l + i·v_l the matrix Im(ω|V) is linear
/// in the real variables (u, v). For even m it is non-degenerate somewhere
/// iff its Pfaffian is not the zero polynomial. The Pfaffian is expanded
/// in the variables whose coefficient matrices form a basis of their span
/// (greedy, in parametrization order); every other variable's matrix is a
/// combination of those, so the restriction is zero iff the full Pfaffian is.
struct ClosedFormExistence {
  std::size_t real_points_dim = 0;
  std::size_t closed_dim = 0;
  std::size_t h2_dim = 0;
  std::vector<std::string> pivot_variables;
  bool other_variables_inert = true;  // all non-pivot matrices vanish
  std::string pfaffian = "1";
  std::string condition;
  bool exists = false;

  lie::Json to_json() const {
    lie::Json j;
    j["real_points_dim"] = real_points_dim;
    j["closed_forms_dim"] = closed_dim;
    j["h2_dim"] = h2_dim;
    j["pivot_variables"] = pivot_variables;
    j["other_variables_inert"] = other_variables_inert;
    j["pfaffian"] = pfaffian;
    j["condition"] = condition;
    j["exists"] = exists;
    return j;
  }
};

namespace detail {

/// Σ_{i<j} z_ij (x^i y^j − x^j y^i) for a 2-cochain z over increasing pairs.
inline GaussianRational eval_cochain(const lie::WedgeBasis& pairs, const Vector& z, const Vector& x, const Vector& y) {
  GaussianRational acc;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (z[p].is_zero()) continue;
    const auto& ij = pairs.subset(p);
    acc += z[p] * (x[ij[0]] * y[ij[1]] - x[ij[1]] * y[ij[0]]);
  }
  return acc;
}

inline std::string render(const MultiPoly& p, const std::vector<std::string>& names, const std::vector<Rational>& scale) {
  if (p.is_zero()) return "0";
  std::map<std::uint64_t, qi::Integer> sorted(p.terms().begin(), p.terms().end());
  std::string out;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    Rational c(it->second);
    std::string mono;
    for (std::size_t v = 0; v < p.vars(); ++v) {
      unsigned e = p.exponent(it->first, v);
      for (unsigned k = 0; k < e; ++k) c *= scale[v];
      if (e == 0) continue;
      mono += "*" + names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (!out.empty()) out += " + ";
    out += "(" + qi::to_string(c) + ")" + mono;
  }
  return out;
}

}  // namespace detail

inline ClosedFormExistence closed_form_existence(const LieAlgebra& g, const Subspace& s, const Subspace& v) {
  ClosedFormExistence out;
  LieAlgebra sub = lie::restrict_to(g, s);
  const std::size_t n = sub.dim();
  lie::WedgeBasis pairs(n, 2);

  std::vector<Vector> closed;
  std::vector<std::string> names;
  auto reps = h2_cochains(sub);
  out.h2_dim = reps.size();
  for (std::size_t k = 0; k < reps.size(); ++k) {
    closed.push_back(qi::to_dense(reps[k], pairs.size()));
    names.push_back(k == 0 ? "c" : "c" + std::to_string(k + 1));
  }
  SparseMatrix d1 = ce_differential(sub, 1);
  qi::EchelonBasis exact(pairs.size());
  for (std::size_t k = 0; k < n; ++k) {
    Vector dxi = d1.apply(qi::unit_vector(n, k));
    if (exact.insert(qi::to_sparse(dxi))) {
      closed.push_back(std::move(dxi));
      names.push_back("xi_" + sub.label(k));
    }
  }
  out.closed_dim = closed.size();
  if (out.closed_dim != n * (n - (n > 0 ? 1 : 0)) / 2 - qi::rank(ce_differential(sub, 2)))
    throw std::logic_error("closed-form parametrization has the wrong dimension");

  auto coords = lie::domain_coordinates(s, v);
  const std::size_t m = coords.size();
  out.real_points_dim = m;
  if (m % 2 == 1) {
    out.pfaffian = "0";
    out.condition = "never (odd dimension)";
    return out;
  }
  if (m == 0) {
    out.exists = true;
    out.condition = "always (no real points)";
    return out;
  }

  // Coefficient matrix (upper triangle, flattened) of each real variable.
  std::vector<std::vector<Rational>> mats;
  std::vector<std::string> var_names;
  for (std::size_t l = 0; l < closed.size(); ++l) {
    std::vector<Rational> re_part, im_part;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        GaussianRational z = detail::eval_cochain(pairs, closed[l], coords[a], coords[b]);
        re_part.push_back(z.re());
        im_part.push_back(z.im());
      }
    // Im((u + iv) z) = u·Im z + v·Re z
    mats.push_back(im_part);
    var_names.push_back("Re(" + names[l] + ")");
    mats.push_back(re_part);
    var_names.push_back("Im(" + names[l] + ")");
  }
  qi::EchelonBasis span(m * (m - 1) / 2);
  std::vector<std::size_t> pivots;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    SparseVector row;
    for (std::size_t e = 0; e < mats[k].size(); ++e)
      if (!qi::is_zero(mats[k][e])) row.emplace_back(e, GaussianRational(mats[k][e]));
    if (span.insert(row))
      pivots.push_back(k);
    else if (!row.empty())
      out.other_variables_inert = false;
  }
  for (std::size_t k : pivots) out.pivot_variables.push_back(var_names[k]);

  // Integer matrices s_k·A_k; the Pfaffian in y_k = x_k / s_k.
  std::vector<Rational> scale;
  std::vector<std::vector<qi::LinearForm>> upper(m, std::vector<qi::LinearForm>(m));
  for (std::size_t v_idx = 0; v_idx < pivots.size(); ++v_idx) {
    const auto& a = mats[pivots[v_idx]];
    qi::Integer den = 1;
    for (const auto& x : a) den = lcm(den, qi::Integer(x.get_den()));
    scale.push_back(Rational(1) / Rational(den));
    std::size_t e = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j, ++e)
        if (!qi::is_zero(a[e])) upper[i][j].emplace_back(v_idx, Rational(a[e] * den).get_num());
  }
  MultiPoly pf = qi::symbolic_pfaffian(upper, pivots.size());
  out.pfaffian = detail::render(pf, out.pivot_variables, scale);
  out.exists = !pf.is_zero();
  if (!out.exists) {
    out.condition = "never (Pfaffian vanishes identically)";
  } else if (pf.term_count() == 1 && pf.support().size() == 1) {
    out.condition = out.pivot_variables[pf.support().front()] + " ≠ 0";
  } else {
    out.condition = out.pfaffian + " ≠ 0";
  }
  return out;
}

}  // namespace subreg::ce
