#pragma once

#include "subreg/lie/algebra.hpp"
#include "subreg/lie/antiinvolution.hpp"
#include "subreg/lie/subspace.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::g2 {

using lie::Antiinvolution;
using lie::LieAlgebra;
using lie::Subspace;
using qi::GaussianRational;
using qi::Rational;
using qi::SparseVector;
using qi::Vector;

/// Root a·α + b·β with α short and β long.
struct Root {
  int a = 0;
  int b = 0;

  Root operator+(const Root& o) const { return {a + o.a, b + o.b}; }
  Root operator-(const Root& o) const { return {a - o.a, b - o.b}; }
  Root operator-() const { return {-a, -b}; }
  bool operator==(const Root& o) const = default;
  bool operator<(const Root& o) const { return a != o.a ? a < o.a : b < o.b; }
  bool positive() const { return a > 0 || (a == 0 && b > 0); }
};

inline std::string to_string(const Root& r) {
  auto term = [](int c, const char* name) -> std::string {
    if (c == 0) return "";
    std::string s = c == 1 ? "" : c == -1 ? "-" : std::to_string(c);
    return s + name;
  };
  std::string ta = term(r.a, "alpha"), tb = term(r.b, "beta");
  if (ta.empty()) return tb;
  if (tb.empty()) return ta;
  return ta + (tb.front() == '-' ? "" : "+") + tb;
}

/// Root system of type G2 built from the simple roots by root strings.
class G2RootSystem {
 public:
  static constexpr Root alpha{1, 0};
  static constexpr Root beta{0, 1};

  G2RootSystem() {
    // Positive roots by induction on height: γ + α_i is a root iff
    // p − q < ⟨γ, α_i^∨⟩ where γ − pα_i, …, γ + qα_i is the string.
    std::vector<Root> layer{alpha, beta};
    positive_ = layer;
    while (!layer.empty()) {
      std::vector<Root> next;
      for (const auto& g : layer)
        for (const auto& s : {alpha, beta}) {
          int p = 0;
          while (is_positive_root(g - Root{s.a * (p + 1), s.b * (p + 1)})) ++p;
          if (p - pairing(g, s) > 0) {
            Root r = g + s;
            bool seen = false;
            for (const auto& x : positive_) seen = seen || x == r;
            for (const auto& x : next) seen = seen || x == r;
            if (!seen) next.push_back(r);
          }
        }
      for (const auto& r : next) positive_.push_back(r);
      layer = std::move(next);
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& x, const Root& y) {
      int hx = x.a + x.b, hy = y.a + y.b;
      return hx != hy ? hx < hy : x.b < y.b;
    });
  }

  /// (γ, δ) with (α,α) = 2, (α,β) = −3, (β,β) = 6.
  static int inner(const Root& x, const Root& y) { return 2 * x.a * y.a - 3 * (x.a * y.b + x.b * y.a) + 6 * x.b * y.b; }
  /// ⟨γ, δ^∨⟩ = 2(γ,δ)/(δ,δ).
  static int pairing(const Root& g, const Root& d) { return 2 * inner(g, d) / inner(d, d); }

  /// Cartan matrix A_ij = ⟨α_i, α_j^∨⟩ in the order (α, β).
  static std::array<std::array<int, 2>, 2> cartan_matrix() {
    return {{{pairing(alpha, alpha), pairing(alpha, beta)}, {pairing(beta, alpha), pairing(beta, beta)}}};
  }

  /// α < β < α+β < 2α+β < 3α+β < 3α+2β.
  const std::vector<Root>& positive() const { return positive_; }
  std::vector<Root> all() const {
    std::vector<Root> r = positive_;
    for (const auto& x : positive_) r.push_back(-x);
    return r;
  }
  bool is_root(const Root& r) const { return is_positive_root(r) || is_positive_root(-r); }

  /// Length of the δ-string through γ: p + q + 1 with γ − pδ, …, γ + qδ roots.
  std::pair<int, int> string(const Root& g, const Root& d) const {
    int p = 0, q = 0;
    while (is_root(g - Root{d.a * (p + 1), d.b * (p + 1)})) ++p;
    while (is_root(g + Root{d.a * (q + 1), d.b * (q + 1)})) ++q;
    return {p, q};
  }

 private:
  bool is_positive_root(const Root& r) const {
    for (const auto& x : positive_)
      if (x == r) return true;
    return false;
  }

  std::vector<Root> positive_;
};

/// Basis positions: H_alpha, H_beta, X_γ (γ > 0 in root order), X_{−γ}.
class G2Index {
 public:
  explicit G2Index(const G2RootSystem& rs) : roots_(rs.all()) {}

  static constexpr std::size_t dim() { return 14; }
  static constexpr std::size_t h_alpha() { return 0; }
  static constexpr std::size_t h_beta() { return 1; }
  std::size_t x(const Root& r) const {
    for (std::size_t k = 0; k < roots_.size(); ++k)
      if (roots_[k] == r) return 2 + k;
    throw std::invalid_argument("not a G2 root: " + to_string(r));
  }
  const Root& root_at(std::size_t idx) const { return roots_.at(idx - 2); }
  const std::vector<Root>& roots() const { return roots_; }

 private:
  std::vector<Root> roots_;
};

/// Chevalley basis data: N_{γ,δ} for every pair of roots with γ+δ a root.
struct G2Structure {
  G2RootSystem roots;
  std::map<std::pair<Root, Root>, int> n;
  int special_sign = 1;  // sign of N_{α+β, 2α+β}

  int constant(const Root& x, const Root& y) const {
    auto it = n.find({x, y});
    return it == n.end() ? 0 : it->second;
  }
};

namespace detail {

inline G2Structure structure_constants(int special_sign) {
  G2Structure st;
  st.special_sign = special_sign;
  const G2RootSystem& rs = st.roots;
  const auto& pos = rs.positive();
  auto order = [&](const Root& r) {
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (pos[k] == r) return k;
    throw std::logic_error("root order lookup failed");
  };
  // Positive pairs: magnitude p + 1 (p from the γ-string through δ), sign +
  // on extraspecial pairs, special_sign on the single other special pair.
  std::map<std::pair<Root, Root>, int> positive_n;
  for (const auto& x : pos)
    for (const auto& y : pos) {
      if (order(x) >= order(y) || !rs.is_root(x + y)) continue;
      Root sum = x + y;
      int p = rs.string(y, x).first;
      bool extraspecial = true;
      for (const auto& z : pos)
        if (order(z) < order(x) && rs.is_root(sum - z) && (sum - z).positive()) extraspecial = false;
      int sign = extraspecial ? 1 : special_sign;
      positive_n[{x, y}] = sign * (p + 1);
      positive_n[{y, x}] = -sign * (p + 1);
    }
  auto same_sign = [&](const Root& x, const Root& y) -> int {
    if (x.positive()) return positive_n.at({x, y});
    return -positive_n.at({-x, -y});
  };
  for (const auto& x : rs.all())
    for (const auto& y : rs.all()) {
      if (!rs.is_root(x + y)) continue;
      if (x.positive() == y.positive()) {
        st.n[{x, y}] = same_sign(x, y);
        continue;
      }
      // x + y + z = 0: N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y).
      Root z = -(x + y);
      int nx = G2RootSystem::inner(x, x), ny = G2RootSystem::inner(y, y), nz = G2RootSystem::inner(z, z);
      int value = z.positive() == y.positive() ? same_sign(y, z) * nz / nx : same_sign(z, x) * nz / ny;
      st.n[{x, y}] = value;
    }
  return st;
}

}  // namespace detail

inline std::string basis_label(const G2Index& ix, std::size_t k) {
  if (k == 0) return "H_alpha";
  if (k == 1) return "H_beta";
  return "X_" + to_string(ix.root_at(k));
}

/// Coordinates of the coroot H_γ = Σ over simple roots of
/// (coefficient · (α_i,α_i)/(γ,γ)) H_{α_i}.
inline SparseVector coroot(const Root& r) {
  int nr = G2RootSystem::inner(r, r);
  SparseVector v;
  if (r.a != 0) v.emplace_back(0, GaussianRational(Rational(r.a * 2) / nr));
  if (r.b != 0) v.emplace_back(1, GaussianRational(Rational(r.b * 6) / nr));
  return v;
}

inline LieAlgebra algebra_from(const G2Structure& st) {
  G2Index ix(st.roots);
  const std::size_t n = G2Index::dim();
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(basis_label(ix, k));
  std::vector<SparseVector> c(n * n);
  auto set = [&](std::size_t i, std::size_t j, SparseVector v) {
    SparseVector neg = v;
    for (auto& e : neg) e.second = -e.second;
    c[i * n + j] = std::move(v);
    c[j * n + i] = std::move(neg);
  };
  const Root simple[2] = {G2RootSystem::alpha, G2RootSystem::beta};
  for (std::size_t h = 0; h < 2; ++h)
    for (const auto& r : ix.roots()) {
      int value = G2RootSystem::pairing(r, simple[h]);
      if (value != 0) set(h, ix.x(r), {{ix.x(r), GaussianRational(value)}});
    }
  for (const auto& x : ix.roots())
    for (const auto& y : ix.roots()) {
      std::size_t i = ix.x(x), j = ix.x(y);
      if (i >= j) continue;
      if (x + y == Root{0, 0}) {
        set(i, j, coroot(x));
      } else if (int nv = st.constant(x, y); nv != 0) {
        set(i, j, {{ix.x(x + y), GaussianRational(nv)}});
      }
    }
  return LieAlgebra(std::move(labels), std::move(c));
}

/// G2 in a Chevalley basis: [H_i, X_γ] = ⟨γ, α_i^∨⟩X_γ, [X_γ, X_{−γ}] = H_γ,
/// N_{γ,δ} = ±(p+1) with + on extraspecial pairs (root order α < β < …).
/// The sign of N_{α+β,2α+β} is the one for which Jacobi holds.
inline LieAlgebra build_g2() {
  for (int sign : {1, -1}) {
    LieAlgebra g = algebra_from(detail::structure_constants(sign));
    if (!lie::find_antisymmetry_violation(g) && !lie::find_jacobi_violation(g)) return g;
  }
  throw std::logic_error("no sign choice satisfies the Jacobi identity");
}

inline G2Structure g2_structure() {
  for (int sign : {1, -1}) {
    G2Structure st = detail::structure_constants(sign);
    if (!lie::find_jacobi_violation(algebra_from(st))) return st;
  }
  throw std::logic_error("no sign choice satisfies the Jacobi identity");
}

enum class Form { compact, split };

inline std::string to_string(Form f) { return f == Form::compact ? "compact" : "split"; }

/// compact: X_γ ↦ −X_{−γ}, H ↦ −H; split: conjugation of coordinates.
inline Antiinvolution build_tau_g2(Form f) {
  G2RootSystem rs;
  G2Index ix(rs);
  const std::size_t n = G2Index::dim();
  std::vector<Vector> images;
  for (std::size_t k = 0; k < n; ++k) {
    Vector v(n);
    if (f == Form::split)
      v[k] = 1;
    else if (k < 2)
      v[k] = -1;
    else
      v[ix.x(-ix.root_at(k))] = -1;
    images.push_back(std::move(v));
  }
  return Antiinvolution::from_basis_images(images);
}

inline Subspace cartan(const LieAlgebra& g) {
  return Subspace::span(g.dim(), {g.basis_vector(G2Index::h_alpha()), g.basis_vector(G2Index::h_beta())});
}

}  // namespace subreg::g2
