#pragma once

#include "subreg/lie/antiinvolution.hpp"
#include "subreg/lie/certificate.hpp"
#include "subreg/lie/subspace.hpp"
#include "subreg/qi/echelon.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::lie {

/// Root of each basis vector outside h, as its values on the basis of h.
/// Throws if some basis vector is not a simultaneous eigenvector.
inline std::vector<Vector> root_functionals(const LieAlgebra& g, const Subspace& h) {
  auto hb = h.basis();
  std::vector<Vector> roots;
  for (std::size_t k = 0; k < g.dim(); ++k) {
    Vector e = g.basis_vector(k);
    if (h.contains(e)) continue;
    Vector values(hb.size());
    for (std::size_t j = 0; j < hb.size(); ++j) {
      Vector br = g.bracket(hb[j], e);
      values[j] = br[k];
      if (br != values[j] * e) throw std::invalid_argument("root_functionals: " + g.label(k) + " is not a root vector");
    }
    roots.push_back(std::move(values));
  }
  return roots;
}

namespace cut_detail {

inline std::string key(const qi::EchelonBasis& e) {
  std::string k;
  for (const auto& r : e.rows()) {
    for (const auto& [c, z] : r) k += std::to_string(c) + ":" + qi::to_string(z) + ",";
    k += ";";
  }
  return k;
}

}  // namespace cut_detail

/// Every subspace of h cut out by equations (γ − δ)(x) = 0 for roots γ ≠ δ,
/// h included. Each cut is returned as the echelon span of its equations
/// (values on the basis of h); the cut itself is the nullspace.
inline std::vector<qi::EchelonBasis> root_difference_cuts(const LieAlgebra& g, const Subspace& h) {
  auto roots = root_functionals(g, h);
  const std::size_t r = h.dim();
  std::vector<SparseVector> equations;
  std::set<std::string> seen_eq;
  for (const auto& a : roots)
    for (const auto& b : roots) {
      Vector f = a - b;
      if (qi::is_zero(f)) continue;
      qi::EchelonBasis line(r);
      line.insert(qi::to_sparse(f));
      if (seen_eq.insert(cut_detail::key(line)).second) equations.push_back(line.rows().front());
    }
  std::vector<qi::EchelonBasis> out{qi::EchelonBasis(r)};
  std::set<std::string> seen{cut_detail::key(out.front())};
  for (std::size_t next = 0; next < out.size(); ++next)
    for (const auto& f : equations) {
      if (out[next].rank() == r) break;
      qi::EchelonBasis m = out[next];
      if (!m.insert(f)) continue;
      if (seen.insert(cut_detail::key(m)).second) out.push_back(std::move(m));
    }
  return out;
}

/// For every root-difference cut L: τ(L) = L, so L + τ(L) = h only for L = h.
inline Certificate compact_root_cut_fixed(const LieAlgebra& g, const Antiinvolution& t, const Subspace& h) {
  Certificate c{"every root-difference cut L of h satisfies tau(L) = L, so L + tau(L) = h forces L = h",
                Status::verified, Json::object(), ""};
  c.witness["cartan_dim"] = h.dim();
  if (!(apply_tau(t, h) == h)) {
    c.status = Status::refuted;
    c.details = "tau does not preserve h";
    return c;
  }
  // τ on coordinates w.r.t. the basis of h (conjugate-linear, so M·conj)
  auto hb = h.basis();
  const std::size_t r = hb.size();
  std::vector<Vector> images;
  for (const auto& b : hb) images.push_back(*h.coordinates(t(b)));
  Antiinvolution th = Antiinvolution::from_basis_images(images);

  auto cuts = root_difference_cuts(g, h);
  c.witness["cuts_checked"] = cuts.size();
  for (const auto& eqs : cuts) {
    std::vector<Vector> basis;
    for (const auto& v : eqs.nullspace()) basis.push_back(qi::to_dense(v, r));
    Subspace l = Subspace::span(r, basis);
    Subspace tl = apply_tau(th, l);
    bool fixed = tl == l;
    bool fills = sum(l, tl).dim() == r;
    if (!fixed || fills != (l.dim() == r)) {
      std::vector<Vector> amb;
      for (const auto& v : basis) {
        Vector x(g.dim());
        for (std::size_t j = 0; j < r; ++j) x = x + v[j] * hb[j];
        amb.push_back(std::move(x));
      }
      c.status = Status::refuted;
      c.witness["counterexample"] = subspace_json(Subspace::span(g.dim(), amb));
      c.details = fixed ? "L + tau(L) = h for a proper cut" : "tau(L) differs from L";
      return c;
    }
  }
  c.details = "all " + std::to_string(cuts.size()) + " cuts are tau-stable";
  return c;
}

}  // namespace subreg::lie
