#pragma once

#include "subreg/lie/certificate.hpp"
#include "subreg/lie/cochains.hpp"
#include "subreg/lie/subalgebra.hpp"
#include "subreg/lie/two_form.hpp"
#include "subreg/qi/linalg.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::ce {

using lie::Certificate;
using lie::Json;
using lie::LieAlgebra;
using lie::Subspace;
using lie::TwoForm;
using qi::GaussianRational;
using qi::SparseMatrix;
using qi::SparseVector;
using qi::Vector;

/// d_k: Λ^k S* → Λ^{k+1} S* for k ∈ {0, 1, 2}, in lexicographic wedge bases.
inline SparseMatrix ce_differential(const LieAlgebra& s, std::size_t k) {
  if (k > 2) throw std::out_of_range("ce_differential: degree must be 0, 1 or 2");
  return lie::cochain_differential(s, k);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Ranks and Betti numbers in degrees 0..2, with the complex checks
/// d_{k+1}·d_k = 0 and rank–nullity asserted.
struct CeSummary {
  std::size_t dim = 0;
  std::array<std::size_t, 4> cochain_dims{};
  std::array<std::size_t, 3> ranks{};
  std::array<std::size_t, 3> betti{};

  Json to_json() const {
    Json j;
    j["dim"] = dim;
    j["cochain_dims"] = cochain_dims;
    j["differential_ranks"] = ranks;
    j["betti"] = betti;
    return j;
  }
};

inline CeSummary summarize(const LieAlgebra& s) {
  CeSummary out;
  out.dim = s.dim();
  for (std::size_t k = 0; k < 4; ++k) out.cochain_dims[k] = binomial(s.dim(), k);
  std::array<SparseMatrix, 3> d;
  for (std::size_t k = 0; k < 3; ++k) {
    d[k] = ce_differential(s, k);
    if (d[k].cols != out.cochain_dims[k] || d[k].rows.size() != out.cochain_dims[k + 1])
      throw std::logic_error("differential has the wrong shape");
    out.ranks[k] = qi::rank(d[k]);
  }
  for (std::size_t k = 0; k + 1 < 3; ++k)
    for (const auto& row : qi::multiply(d[k + 1], d[k]).rows)
      if (!row.empty()) throw std::logic_error("d∘d is nonzero");
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t kernel = out.cochain_dims[k] - out.ranks[k];
    std::size_t image = k == 0 ? 0 : out.ranks[k - 1];
    if (kernel < image) throw std::logic_error("image of d exceeds the kernel");
    out.betti[k] = kernel - image;
  }
  return out;
}

/// dim H^k(S, C) = dim ker d_k − rank d_{k−1}.
inline std::size_t betti(const LieAlgebra& s, std::size_t k) {
  if (k > 2) throw std::out_of_range("betti: degree must be 0, 1 or 2");
  std::size_t kernel = binomial(s.dim(), k) - qi::rank(ce_differential(s, k));
  std::size_t image = k == 0 ? 0 : qi::rank(ce_differential(s, k - 1));
  return kernel - image;
}

inline std::size_t betti(const LieAlgebra& g, const Subspace& s, std::size_t k) {
  return betti(lie::restrict_to(g, s), k);
}

/// Image of d_{k−1} (the exact k-cochains) as an echelon basis; zero for k = 0.
inline qi::EchelonBasis exact_cochains(const LieAlgebra& s, std::size_t k) {
  if (k > 2) throw std::out_of_range("exact_cochains: degree must be 0, 1 or 2");
  qi::EchelonBasis b(binomial(s.dim(), k));
  if (k == 0) return b;
  SparseMatrix d = ce_differential(s, k - 1);
  // columns of d are the images of the basis (k−1)-cochains
  std::vector<SparseVector> cols(d.cols);
  for (std::size_t r = 0; r < d.rows.size(); ++r)
    for (const auto& [c, z] : d.rows[r]) cols[c].emplace_back(r, z);
  for (const auto& v : cols) b.insert(v);
  return b;
}

inline qi::EchelonBasis exact_two_cochains(const LieAlgebra& s) { return exact_cochains(s, 2); }

/// Closed k-cochains reduced modulo the exact ones, then echelonized: a
/// canonical basis of a complement of im d_{k−1} in ker d_k.
inline std::vector<SparseVector> cohomology_cochains(const LieAlgebra& s, std::size_t k) {
  qi::EchelonBasis exact = exact_cochains(s, k);
  qi::EchelonBasis reps(exact.cols());
  for (const auto& z : qi::nullspace(ce_differential(s, k))) reps.insert(exact.reduce(z));
  return reps.rows();
}

inline std::vector<SparseVector> h2_cochains(const LieAlgebra& s) { return cohomology_cochains(s, 2); }

/// {"e1^e2": "v", …} over the lexicographic wedge basis of Λ^k S*.
inline Json cochain_json(const LieAlgebra& s, std::size_t k, const SparseVector& c) {
  lie::WedgeBasis basis(s.dim(), k);
  Json o = Json::object();
  for (const auto& [p, z] : c) {
    std::string key;
    for (std::size_t i : basis.subset(p)) key += (key.empty() ? "" : "^") + s.label(i);
    o[key.empty() ? "1" : key] = qi::to_string(z);
  }
  return o;
}

inline std::vector<TwoForm> h2_representatives(const LieAlgebra& g, const Subspace& s) {
  LieAlgebra sub = lie::restrict_to(g, s);
  const std::size_t pairs = binomial(sub.dim(), 2);
  std::vector<TwoForm> out;
  for (const auto& c : h2_cochains(sub)) out.push_back(lie::two_form_from_cochain(s, qi::to_dense(c, pairs)));
  return out;
}

/// ξ ↦ dξ is injective on functionals ξ vanishing on the basis vectors of S
/// outside W (so a closed form equals dξ for at most one such ξ).
inline Certificate unique_primitive(const LieAlgebra& g, const Subspace& s, const Subspace& w) {
  if (!s.contains(w)) throw std::invalid_argument("unique_primitive: W is not contained in S");
  LieAlgebra sub = lie::restrict_to(g, s);
  auto basis = s.basis();
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (w.contains(basis[k])) free.push_back(k);
  SparseMatrix d1 = ce_differential(sub, 1);
  SparseMatrix restricted{free.size(), {}};
  for (const auto& row : d1.rows) {
    SparseVector r;
    for (std::size_t f = 0; f < free.size(); ++f)
      if (const auto* z = qi::find_entry(row, free[f])) r.emplace_back(f, *z);
    restricted.rows.push_back(std::move(r));
  }
  std::size_t kernel = free.size() - qi::rank(restricted);
  Certificate c{"the primitive xi supported on W is unique", lie::status_of(kernel == 0), Json::object(), ""};
  c.witness["support_dim"] = free.size();
  c.witness["kernel_dim"] = kernel;
  c.details = kernel == 0 ? "d is injective on functionals supported on W"
                          : "some nonzero functional supported on W is closed";
  return c;
}

}  // namespace subreg::ce
