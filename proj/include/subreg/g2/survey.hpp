#pragma once

#include "subreg/ce/cohomology.hpp"
#include "subreg/ce/existence.hpp"
#include "subreg/g2/g2.hpp"
#include "subreg/lie/admissible.hpp"
#include "subreg/lie/structure.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::g2 {

using lie::Certificate;
using lie::Json;
using lie::Status;

enum class CandidateKind { L_plus_n, borel, h_alpha_line, h_beta_line, g2_beta, g2_alpha, full };

inline constexpr std::array<CandidateKind, 7> all_kinds = {
    CandidateKind::L_plus_n, CandidateKind::borel,   CandidateKind::h_alpha_line, CandidateKind::h_beta_line,
    CandidateKind::g2_beta,  CandidateKind::g2_alpha, CandidateKind::full};

inline std::string to_string(CandidateKind k) {
  switch (k) {
    case CandidateKind::L_plus_n: return "L_plus_n";
    case CandidateKind::borel: return "borel";
    case CandidateKind::h_alpha_line: return "h_alpha_line";
    case CandidateKind::h_beta_line: return "h_beta_line";
    case CandidateKind::g2_beta: return "g2_beta";
    case CandidateKind::g2_alpha: return "g2_alpha";
    case CandidateKind::full: return "full";
  }
  throw std::logic_error("unknown candidate kind");
}

inline CandidateKind parse_kind(const std::string& s) {
  for (auto k : all_kinds)
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown candidate kind: " + s);
}

/// Vector a·H_α + b·H_β for an H-coordinate pair.
inline Vector h_vector(const Vector& l) {
  if (l.size() != 2) throw std::invalid_argument("Cartan vector needs 2 coordinates");
  Vector v(G2Index::dim());
  v[G2Index::h_alpha()] = l[0];
  v[G2Index::h_beta()] = l[1];
  return v;
}

inline std::vector<Vector> nilradical_vectors(const LieAlgebra& g) {
  G2RootSystem rs;
  G2Index ix(rs);
  std::vector<Vector> out;
  for (const auto& r : rs.positive()) out.push_back(g.basis_vector(ix.x(r)));
  return out;
}

inline Subspace nilradical(const LieAlgebra& g) { return Subspace::span(g.dim(), nilradical_vectors(g)); }

inline Subspace borel(const LieAlgebra& g) {
  auto gens = nilradical_vectors(g);
  gens.push_back(g.basis_vector(G2Index::h_alpha()));
  gens.push_back(g.basis_vector(G2Index::h_beta()));
  return Subspace::span(g.dim(), gens);
}

/// Candidate subalgebras: L⊕𝔫; 𝔟; CH_α⊕CX_{−α}⊕𝔫; CH_β⊕CX_{−β}⊕𝔫;
/// G2[β] = CX_{−α}⊕𝔟; G2[α] = CX_{−β}⊕𝔟; 𝔤. `line` gives L (H-coordinates)
/// for L_plus_n and is ignored otherwise.
inline Subspace build_candidate(const LieAlgebra& g, CandidateKind kind, const std::optional<Vector>& line = {}) {
  G2RootSystem rs;
  G2Index ix(rs);
  auto gens = nilradical_vectors(g);
  const Vector ha = g.basis_vector(G2Index::h_alpha()), hb = g.basis_vector(G2Index::h_beta());
  switch (kind) {
    case CandidateKind::L_plus_n:
      if (!line) throw std::invalid_argument("L_plus_n needs a line L");
      if (qi::is_zero(*line)) throw std::invalid_argument("L_plus_n: L must be nonzero");
      gens.push_back(h_vector(*line));
      break;
    case CandidateKind::borel:
      gens.push_back(ha);
      gens.push_back(hb);
      break;
    case CandidateKind::h_alpha_line:
      gens.push_back(ha);
      gens.push_back(g.basis_vector(ix.x(-G2RootSystem::alpha)));
      break;
    case CandidateKind::h_beta_line:
      gens.push_back(hb);
      gens.push_back(g.basis_vector(ix.x(-G2RootSystem::beta)));
      break;
    case CandidateKind::g2_beta:
      gens.push_back(ha);
      gens.push_back(hb);
      gens.push_back(g.basis_vector(ix.x(-G2RootSystem::alpha)));
      break;
    case CandidateKind::g2_alpha:
      gens.push_back(ha);
      gens.push_back(hb);
      gens.push_back(g.basis_vector(ix.x(-G2RootSystem::beta)));
      break;
    case CandidateKind::full:
      return Subspace::full(g.dim());
  }
  Subspace s = Subspace::span(g.dim(), gens);
  if (!lie::is_subalgebra(g, s).verified()) throw std::logic_error("candidate " + to_string(kind) + " is not closed");
  return s;
}

/// 𝔥 ⊕ CX_β ⊕ CX_{−β} ⊕ CX_{2α+β} ⊕ CX_{3α+β} ⊕ CX_{3α+2β} over the standard Cartan.
inline Subspace build_s3(const LieAlgebra& g) {
  G2Index ix{G2RootSystem{}};
  std::vector<Vector> gens{g.basis_vector(G2Index::h_alpha()), g.basis_vector(G2Index::h_beta())};
  for (Root r : {Root{0, 1}, Root{0, -1}, Root{2, 1}, Root{3, 1}, Root{3, 2}}) gens.push_back(g.basis_vector(ix.x(r)));
  Subspace s = Subspace::span(g.dim(), gens);
  if (!lie::is_subalgebra(g, s).verified()) throw std::logic_error("s3 is not closed");
  return s;
}

/// Lines L = C(a·H_α + b·H_β) used for the L_plus_n family: three
/// complex-structure lines for the compact form, then two conjugation-stable
/// lines.
inline std::vector<Vector> sample_lines() {
  const GaussianRational i = GaussianRational::i();
  return {{1, i}, {1, GaussianRational(1) + i}, {2, -i}, {1, 0}, {1, 1}};
}

/// Sum condition and closed-form existence for one subalgebra.
inline Certificate admissibility_capability(const LieAlgebra& g, const Antiinvolution& t, const Subspace& s,
                                            const std::string& name) {
  Certificate c{name + " admits a closed omega forming an admissible pair", Status::refuted, Json::object(), ""};
  c.witness["dim"] = s.dim();
  Certificate sub = lie::is_subalgebra(g, s);
  Certificate sum = lie::sum_condition(g, t, s);
  c.witness["sum_condition"] = sum.to_json();
  Subspace v = lie::real_points(t, s);
  ce::ClosedFormExistence ex = ce::closed_form_existence(g, s, v);
  c.witness["closed_forms"] = ex.to_json();
  c.witness["cohomology"] = ce::summarize(lie::restrict_to(g, s)).to_json();
  if (!sub.verified()) {
    c.details = "not a subalgebra";
  } else if (!sum.verified()) {
    c.details = "s + tau(s) != g";
  } else if (!ex.exists) {
    c.details = "Im(omega) is degenerate on the real points for every closed omega: " + ex.condition;
  } else {
    c.status = Status::verified;
    c.details = "non-degenerate iff " + ex.condition;
  }
  if (sum.verified() && s.dim() < 7) throw std::logic_error("s + tau(s) = g with dim(s) < 7");
  return c;
}

/// Biconditional for a line L ⊂ 𝔥: L⊕𝔫 + τ(L⊕𝔫) = 𝔤 iff L ∩ conj(L) = 0,
/// with conj the conjugation of 𝔥 = 𝔥₀ ⊗ C. Writing the generator as
/// a·r₁ + b·r₂ in a basis of 𝔥₀, L ∩ conj(L) = 0 iff Im(a·conj(b)) ≠ 0.
/// The equivalence presupposes τ(𝔫) = 𝔫⁻; otherwise the result is infeasible.
inline Certificate complex_structure_line_test(const LieAlgebra& g, const Antiinvolution& t, const Subspace& l) {
  if (!l.is_complex() || l.dim() != 1) throw std::invalid_argument("complex_structure_line_test needs a line");
  Subspace h = cartan(g);
  if (!h.contains(l)) throw std::invalid_argument("complex_structure_line_test: L is not in the Cartan");
  Certificate c{"L + n + tau(L + n) = g iff L is the holomorphic line of a complex structure on h0",
                Status::verified, Json::object(), ""};
  Vector gen = l.basis().front();
  c.witness["L"] = lie::labeled_vector_json(g.labels(), gen);

  auto gens = nilradical_vectors(g);
  gens.push_back(gen);
  Subspace s = Subspace::span(g.dim(), gens);
  Certificate side_sum = lie::sum_condition(g, t, s);

  Subspace h0 = lie::real_points(t, h);
  Subspace n = nilradical(g);
  std::vector<Vector> neg;
  G2Index ix{G2RootSystem{}};
  for (const auto& r : ix.roots())
    if (!r.positive()) neg.push_back(g.basis_vector(ix.x(r)));
  bool tau_opposes_n = lie::apply_tau(t, n) == Subspace::span(g.dim(), neg);
  c.witness["tau_maps_n_to_opposite"] = tau_opposes_n;
  if (h0.dim() != 2) throw std::logic_error("real points of the Cartan are not 2-dimensional");
  auto r = h0.basis();
  // gen = a·r₁ + b·r₂ over C
  qi::QiMatrix rm(g.dim(), 2), rhs(g.dim(), 1);
  for (std::size_t k = 0; k < g.dim(); ++k) {
    rm(k, 0) = r[0][k];
    rm(k, 1) = r[1][k];
    rhs(k, 0) = gen[k];
  }
  auto sol = qi::solve(rm, rhs);
  if (!sol || !sol->nullspace.empty()) throw std::logic_error("real basis of h0 does not span h");
  Vector ab{sol->particular(0, 0), sol->particular(1, 0)};
  GaussianRational cross = ab[0] * ab[1].conj();
  bool holomorphic = !qi::is_zero(cross.im());
  Certificate side_line{"L is the holomorphic line of a complex structure on h0", lie::status_of(holomorphic),
                        Json::object(), ""};
  side_line.witness["h0_basis"] = Json::array();
  for (const auto& x : r) side_line.witness["h0_basis"].push_back(lie::labeled_vector_json(g.labels(), x));
  side_line.witness["a"] = lie::value_json(ab[0]);
  side_line.witness["b"] = lie::value_json(ab[1]);
  side_line.witness["Im(a*conj(b))"] = qi::to_string(cross.im());
  side_line.details = holomorphic ? "L and conj(L) are independent" : "L is conjugation-stable";
  c.witness["sum_side"] = side_sum.to_json();
  c.witness["line_side"] = side_line.to_json();
  if (!tau_opposes_n) {
    c.status = Status::infeasible;
    c.details = "tau does not act as -Id on the roots, so the equivalence does not apply";
  } else if (side_sum.verified() != side_line.verified()) {
    c.status = Status::refuted;
    c.details = "contradiction: the two sides disagree";
  } else {
    c.details = side_sum.verified() ? "both sides hold" : "both sides fail";
  }
  return c;
}

inline Antiinvolution build_tau(Form f) { return build_tau_g2(f); }

/// One capability certificate per candidate kind, in the fixed kind order.
/// L_plus_n is decided on the sampled lines (capable iff some sample is).
inline std::vector<Certificate> survey(const LieAlgebra& g, Form f) {
  Antiinvolution t = build_tau_g2(f);
  std::vector<Certificate> out;
  for (auto kind : all_kinds) {
    if (kind != CandidateKind::L_plus_n) {
      Certificate c = admissibility_capability(g, t, build_candidate(g, kind), to_string(kind));
      c.witness["kind"] = to_string(kind);
      out.push_back(std::move(c));
      continue;
    }
    Certificate c{"L_plus_n admits a closed omega forming an admissible pair", Status::refuted, Json::object(), ""};
    c.witness["kind"] = "L_plus_n";
    Json lines = Json::array();
    std::size_t capable = 0;
    for (const auto& line : sample_lines()) {
      Subspace s = build_candidate(g, kind, line);
      Certificate one = admissibility_capability(g, t, s, "L_plus_n");
      Json j = one.to_json();
      j["line"] = lie::vector_json(line);
      j["line_test"] = complex_structure_line_test(g, t, Subspace::span(g.dim(), {h_vector(line)})).to_json();
      lines.push_back(j);
      if (one.verified()) ++capable;
    }
    c.witness["sampled_lines"] = lines;
    c.witness["capable_lines"] = capable;
    if (capable > 0) {
      c.status = Status::verified;
      c.details = std::to_string(capable) + " of the sampled lines give admissible pairs";
    } else {
      c.details = "no sampled line satisfies both conditions";
    }
    out.push_back(std::move(c));
  }
  if (f == Form::split)
    for (auto& c : out)
      c.witness["note"] =
          "tau fixes every root space; the two surviving cases of the compact analysis need tau = -Id on the roots";
  return out;
}

/// dim Hom([𝔟,𝔟], C), the Σ₀ condition on c·ω₀ restricted to 𝔥₀, and the
/// open-orbit count r (a literature constant, not computed).
inline Json parametrization_constants(const LieAlgebra& g, Form f) {
  Json j;
  Subspace b = borel(g);
  Subspace bb = lie::bracket_span(g, b, b);
  if (!(bb == nilradical(g))) throw std::logic_error("[b, b] differs from the nilradical");
  j["dim_hom_bb"] = bb.dim();
  Antiinvolution t = build_tau_g2(f);
  Subspace h = cartan(g);
  Subspace h0 = lie::real_points(t, h);
  auto reps = ce::h2_representatives(g, b);
  if (reps.size() != 1) throw std::logic_error("H^2 of the Borel is not 1-dimensional");
  // c·ω₀ on 𝔥₀: Im(c·ω₀(r₁, r₂)) = Im(c)·ω₀(r₁, r₂) when ω₀(r₁, r₂) is real.
  GaussianRational w = reps.front()(h0.basis()[0], h0.basis()[1]);
  std::string cond;
  if (w.is_zero())
    cond = "never";
  else if (w.is_real())
    cond = "Im(c) ≠ 0";
  else if (qi::is_zero(w.re()))
    cond = "Re(c) ≠ 0";
  else
    cond = "Im(c*(" + qi::to_string(w) + ")) ≠ 0";
  j["sigma0_condition"] = cond;
  j["omega0_on_h0"] = lie::value_json(w);
  j["r"] = f == Form::compact ? 1 : 3;
  j["r_provenance"] = "literature constant, not computed";
  return j;
}

}  // namespace subreg::g2
