#pragma once

#include "subreg/lie/admissible.hpp"
#include "subreg/lie/structure.hpp"
#include "subreg/so2n/so2n.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::so2n {

using lie::Certificate;
using lie::Json;
using lie::Status;
using lie::TwoForm;

enum class Form { lorentz, compact };

inline std::string to_string(Form f) { return f == Form::lorentz ? "lorentz" : "compact"; }

/// L ⊊ 𝔥₁ with H_{n−1} + H_n ∈ L, and H ∈ 𝔥₁ \ L, where 𝔥₁ = ker(ε_{n−1} − ε_n).
/// Vectors are in H-coordinates (length n).
struct SubalgebraPreset {
  std::size_t n = 0;
  std::vector<Vector> l_basis;
  Vector h;

  /// H = H_1, L = span{H_2, …, H_{n−2}} ⊕ C(H_{n−1} + H_n).
  static SubalgebraPreset standard(std::size_t n) {
    So2nIndex ix(n);
    SubalgebraPreset p;
    p.n = n;
    for (std::size_t k = 2; k + 2 <= n; ++k) p.l_basis.push_back(qi::unit_vector(n, k - 1));
    Vector last(n);
    last[n - 2] = 1;
    last[n - 1] = 1;
    p.l_basis.push_back(last);
    p.h = qi::unit_vector(n, 0);
    return p;
  }
};

/// H-coordinates embedded into so(2n) coordinates.
inline Vector embed_h(const So2nIndex& ix, const Vector& h) {
  if (h.size() != ix.n()) throw std::invalid_argument("H-coordinate vector has the wrong length");
  Vector v(ix.dim());
  for (std::size_t k = 1; k <= ix.n(); ++k) v[ix.h(k)] = h[k - 1];
  return v;
}

inline Subspace preset_l(const So2nIndex& ix, const SubalgebraPreset& p) {
  std::vector<Vector> gens;
  for (const auto& v : p.l_basis) gens.push_back(embed_h(ix, v));
  return Subspace::span(ix.dim(), gens);
}

/// Throws std::invalid_argument naming the first violated requirement.
inline void validate(const SubalgebraPreset& p) {
  So2nIndex ix(p.n);
  const std::size_t n = p.n;
  auto in_h1 = [n](const Vector& v) { return v[n - 2] == v[n - 1]; };
  for (const auto& v : p.l_basis) {
    if (v.size() != n) throw std::invalid_argument("preset: L vector has the wrong length");
    if (!in_h1(v)) throw std::invalid_argument("preset: L is not contained in h1");
  }
  if (p.h.size() != n) throw std::invalid_argument("preset: H has the wrong length");
  if (!in_h1(p.h)) throw std::invalid_argument("preset: H is not in h1");
  Subspace l = preset_l(ix, p);
  Vector sum_last(n);
  sum_last[n - 2] = 1;
  sum_last[n - 1] = 1;
  if (!l.contains(embed_h(ix, sum_last))) throw std::invalid_argument("preset: L does not contain H_{n-1}+H_n");
  if (l.dim() >= n - 1) throw std::invalid_argument("preset: L is not a proper subspace of h1");
  if (l.contains(embed_h(ix, p.h))) throw std::invalid_argument("preset: H lies in L");
}

/// L ⊕ C(H + X_{n−1,n}) ⊕ X_jk (j<k, (j,k) ≠ (n−1,n)) ⊕ Y_jk (j<k) ⊕ C Z_{n−1,n}.
inline Subspace build_s(const LieAlgebra& g, const SubalgebraPreset& p) {
  validate(p);
  So2nIndex ix(p.n);
  const std::size_t n = p.n;
  if (g.dim() != ix.dim()) throw std::invalid_argument("build_s: algebra is not so(2n) for this n");
  std::vector<Vector> gens;
  for (const auto& v : p.l_basis) gens.push_back(embed_h(ix, v));
  gens.push_back(embed_h(ix, p.h) + g.basis_vector(ix.x(n - 1, n)));
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k)
      if (!(j == n - 1 && k == n)) gens.push_back(g.basis_vector(ix.x(j, k)));
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k) gens.push_back(g.basis_vector(ix.y(j, k)));
  gens.push_back(g.basis_vector(ix.z(n - 1, n)));
  Subspace s = Subspace::span(g.dim(), gens);
  if (!lie::is_subalgebra(g, s).verified()) throw std::logic_error("build_s: span is not a subalgebra");
  return s;
}

/// ε_k(v) = coefficient of H_k in v.
inline GaussianRational epsilon(const So2nIndex& ix, std::size_t k, const Vector& v) { return v[ix.h(k)]; }

/// i·Σ_{j=1}^{m/2} ε_{2j−1} ∧ ε_{2j} evaluated on the basis of V (m = dim V).
inline QiMatrix omega_target(const So2nIndex& ix, const Subspace& v) {
  auto basis = v.basis();
  const std::size_t m = basis.size();
  QiMatrix t(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      GaussianRational acc;
      for (std::size_t j = 1; 2 * j <= m && 2 * j <= ix.n(); ++j)
        acc += epsilon(ix, 2 * j - 1, basis[a]) * epsilon(ix, 2 * j, basis[b]) -
               epsilon(ix, 2 * j - 1, basis[b]) * epsilon(ix, 2 * j, basis[a]);
      t(a, b) = GaussianRational::i() * acc;
      t(b, a) = -t(a, b);
    }
  return t;
}

inline Antiinvolution build_tau(const LieAlgebra& g, std::size_t n, Form f) {
  return f == Form::lorentz ? build_tau_lorentz(g, n) : build_tau_compact(g, n);
}

/// Closed ω on s restricting to omega_target on the real points of s.
/// Throws when dim(s ∩ g₀) is odd or the extension problem is infeasible.
inline TwoForm build_omega(const LieAlgebra& g, const Antiinvolution& t, const Subspace& s, std::size_t n) {
  So2nIndex ix(n);
  Subspace v = lie::real_points(t, s);
  if (v.dim() % 2 != 0)
    throw std::invalid_argument("build_omega: real points have odd dimension " + std::to_string(v.dim()));
  auto w = lie::solve_closed_extension(g, s, v, omega_target(ix, v));
  if (!w) throw std::logic_error("build_omega: no closed extension of the target restriction");
  return *w;
}

/// Components of the end-to-end check for one so(2n) instance.
struct Theorem22Report {
  Certificate admissible;
  Certificate codimension;
  Certificate nonregularity;

  std::vector<Certificate> certificates() const { return {admissible, codimension, nonregularity}; }
  bool verified() const { return admissible.verified() && codimension.verified() && nonregularity.verified(); }
};

/// Runs admissibility, codim-1 normalizer and non-regularity for the
/// given preset and real form. For odd dim(s ∩ g₀) the zero form is used,
/// since every antisymmetric form on an odd-dimensional space is degenerate.
inline Theorem22Report theorem22_report(std::size_t n, Form f, const std::optional<SubalgebraPreset>& preset = {}) {
  So2nIndex ix(n);
  LieAlgebra g = build_so2n(n);
  SubalgebraPreset p = preset ? *preset : SubalgebraPreset::standard(n);
  if (p.n != n) throw std::invalid_argument("preset rank differs from n");
  Subspace s = build_s(g, p);
  Antiinvolution t = build_tau(g, n, f);
  Subspace v = lie::real_points(t, s);
  TwoForm w = TwoForm::zero(s);
  std::string omega_note;
  if (v.dim() % 2 == 1) {
    omega_note = "real points have odd dimension; zero form used (every form is degenerate there)";
  } else if (auto sol = lie::solve_closed_extension(g, s, v, omega_target(ix, v))) {
    w = *sol;
    omega_note = "closed extension of the epsilon target";
  } else {
    omega_note = "no closed extension of the epsilon target; zero form used";
  }

  Theorem22Report r;
  r.admissible = lie::check_admissible_pair(g, t, s, w);
  r.admissible.witness["omega_construction"] = omega_note;
  r.admissible.witness["real_points_dim"] = v.dim();

  Subspace h = cartan(g, ix);
  Subspace norm = lie::normalizer_in(g, h, s);
  std::size_t codim = h.dim() - norm.dim();
  r.codimension = {"s is normalized by a codimension-1 subalgebra of the standard Cartan", lie::status_of(codim == 1),
                   Json::object(), ""};
  r.codimension.witness["cartan_dim"] = h.dim();
  r.codimension.witness["normalizer_dim"] = norm.dim();
  r.codimension.witness["codimension"] = codim;
  Json nb = Json::array();
  for (const auto& x : norm.basis()) nb.push_back(lie::labeled_vector_json(g.labels(), x));
  r.codimension.witness["normalizer_basis"] = nb;
  r.codimension.details = "codimension " + std::to_string(codim);

  r.nonregularity = lie::nonregularity_certificate(g, s);
  return r;
}

/// Single composite certificate (all three components must verify).
inline Certificate theorem22_certificate(const Theorem22Report& r, std::size_t n) {
  Certificate c{"so(" + std::to_string(2 * n) + ") subalgebra s with omega is admissible and subregular strictly in "
                "codimension 1",
                lie::status_of(r.verified()), Json::object(), ""};
  Json parts = Json::array();
  for (const auto& x : r.certificates()) parts.push_back(x.to_json());
  c.witness["components"] = parts;
  c.details = r.verified() ? "all components verified" : "at least one component failed";
  return c;
}

inline Certificate theorem22_certificate(std::size_t n, Form f = Form::lorentz) {
  return theorem22_certificate(theorem22_report(n, f), n);
}

}  // namespace subreg::so2n
