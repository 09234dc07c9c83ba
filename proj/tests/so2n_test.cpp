#include "subreg/ce/cohomology.hpp"
#include "subreg/lie/root_cut.hpp"
#include "subreg/so2n/theorem.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace subreg;
using lie::Subspace;
using qi::GaussianRational;
using qi::Vector;

namespace {

Vector h_sum(const so2n::So2nIndex& ix, const lie::LieAlgebra& g, std::size_t j, std::size_t k, int sign) {
  return g.basis_vector(ix.h(j)) + GaussianRational(sign) * g.basis_vector(ix.h(k));
}

so2n::SubalgebraPreset preset4(std::vector<Vector> l, Vector h) {
  so2n::SubalgebraPreset p;
  p.n = 4;
  p.l_basis = std::move(l);
  p.h = std::move(h);
  return p;
}

}  // namespace

TEST(So2n, DisplayedBracketIdentitiesForSmallRanks) {
  for (std::size_t n : {3, 4, 5}) {
    so2n::So2nIndex ix(n);
    auto g = so2n::build_so2n(n);
    ASSERT_EQ(g.dim(), n * (2 * n - 1));
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) {
        EXPECT_EQ(g.bracket(g.basis_vector(ix.y(j, k)), g.basis_vector(ix.z(j, k))),
                  GaussianRational(4) * h_sum(ix, g, j, k, 1))
            << "[Y" << j << k << ", Z" << j << k << "]";
        EXPECT_EQ(g.bracket(g.basis_vector(ix.x(j, k)), g.basis_vector(ix.x(k, j))),
                  GaussianRational(4) * h_sum(ix, g, j, k, -1))
            << "[X" << j << k << ", X" << k << j << "]";
      }
    // (ε₁ − ε₂)(H₁) = 1
    EXPECT_EQ(g.bracket(g.basis_vector(ix.h(1)), g.basis_vector(ix.x(1, 2))), g.basis_vector(ix.x(1, 2)));
  }
}

TEST(So2n, JacobiAndAntisymmetryExhaustiveOnSo8) {
  auto g = so2n::build_so2n(4);
  EXPECT_FALSE(lie::find_antisymmetry_violation(g).has_value());
  EXPECT_FALSE(lie::find_jacobi_violation(g).has_value());
  EXPECT_FALSE(lie::find_matrix_rep_violation(g).has_value());
}

TEST(So2n, ConjugationsAreAntiinvolutiveAutomorphisms) {
  so2n::So2nIndex ix(4);
  auto g = so2n::build_so2n(4);
  for (auto f : {so2n::Form::lorentz, so2n::Form::compact}) {
    auto t = so2n::build_tau(g, 4, f);
    EXPECT_TRUE(t.is_involution());
    EXPECT_FALSE(lie::find_automorphism_violation(g, t).has_value());
    // τ(C·Y₁₂) = C·Z₁₂
    EXPECT_TRUE(lie::apply_tau(t, Subspace::span(g.dim(), {g.basis_vector(ix.y(1, 2))})) ==
                Subspace::span(g.dim(), {g.basis_vector(ix.z(1, 2))}));
  }
  auto compact = so2n::build_tau_compact(g, 4);
  auto lorentz = so2n::build_tau_lorentz(g, 4);
  for (std::size_t k = 1; k <= 4; ++k) {
    Vector hk = g.basis_vector(ix.h(k));
    EXPECT_EQ(compact(hk), GaussianRational(-1) * hk);
    EXPECT_EQ(lorentz(hk), GaussianRational(k < 4 ? -1 : 1) * hk);
  }
}

TEST(So2n, SubalgebraDimensionAndRealPoints) {
  for (std::size_t n : {3, 4, 5, 6}) {
    auto g = so2n::build_so2n(n);
    Subspace s = so2n::build_s(g, so2n::SubalgebraPreset::standard(n));
    EXPECT_EQ(s.dim(), (n - 2) + 1 + (n * (n - 1) / 2 - 1) + n * (n - 1) / 2 + 1);
    Subspace v = lie::real_points(so2n::build_tau_lorentz(g, n), s);
    EXPECT_EQ(v.dim(), n - 2);
  }
}

TEST(So2n, PresetValidationRejectsBadData) {
  auto e = [](std::size_t k) { return qi::unit_vector(4, k - 1); };
  Vector h34 = e(3) + e(4);
  EXPECT_NO_THROW(so2n::validate(preset4({h34}, e(1))));
  EXPECT_THROW(so2n::validate(preset4({e(2)}, e(1))), std::invalid_argument);  // misses H3+H4
  EXPECT_THROW(so2n::validate(preset4({h34, e(3)}, e(1))), std::invalid_argument);  // not in h1
  EXPECT_THROW(so2n::validate(preset4({h34, e(1), e(2)}, e(1))), std::invalid_argument);  // not proper
  EXPECT_THROW(so2n::validate(preset4({h34, e(2)}, e(2))), std::invalid_argument);  // H in L
}

// s + τ(s) = g iff L + CH + τ(L + CH) = h, both sides computed independently.
TEST(So2n, SumConditionBiconditionalOverPresetFamily) {
  so2n::So2nIndex ix(4);
  auto g = so2n::build_so2n(4);
  auto t = so2n::build_tau_lorentz(g, 4);
  Subspace h = so2n::cartan(g, ix);
  auto e = [](std::size_t k) { return qi::unit_vector(4, k - 1); };
  const GaussianRational i = GaussianRational::i();
  Vector h34 = e(3) + e(4);
  std::vector<so2n::SubalgebraPreset> family{
      so2n::SubalgebraPreset::standard(4),
      preset4({h34}, e(1)),
      preset4({h34}, e(1) + i * e(2)),
      preset4({h34, e(1) + i * e(2)}, e(2)),
      preset4({h34, e(1) + e(2)}, e(1)),
      preset4({h34, GaussianRational(2) * e(1) - e(2)}, e(1) + e(2)),
  };
  std::size_t holds = 0;
  for (const auto& p : family) {
    Subspace s = so2n::build_s(g, p);
    bool lhs = lie::sum_condition(g, t, s).verified();
    std::vector<Vector> gens;
    for (const auto& v : p.l_basis) gens.push_back(so2n::embed_h(ix, v));
    gens.push_back(so2n::embed_h(ix, p.h));
    Subspace lch = Subspace::span(g.dim(), gens);
    bool rhs = lie::sum(lch, lie::apply_tau(t, lch)) == h;
    EXPECT_EQ(lhs, rhs);
    holds += lhs;
  }
  EXPECT_GT(holds, 0u);
  EXPECT_LT(holds, family.size());
}

TEST(So2n, AdmissiblePairCodimOneAndNonRegularForN4) {
  auto r = so2n::theorem22_report(4, so2n::Form::lorentz);
  EXPECT_TRUE(r.admissible.verified());
  EXPECT_TRUE(r.codimension.verified());
  EXPECT_EQ(r.codimension.witness["codimension"], 1);
  ASSERT_TRUE(r.nonregularity.verified());
  EXPECT_EQ(r.nonregularity.witness["nilpotent_part"], lie::Json({{"X34", "1"}}));

  auto g = so2n::build_so2n(4);
  auto t = so2n::build_tau_lorentz(g, 4);
  Subspace s = so2n::build_s(g, so2n::SubalgebraPreset::standard(4));
  auto w = so2n::build_omega(g, t, s, 4);
  EXPECT_TRUE(lie::is_closed(g, w).verified());
  auto im = lie::restrict_im(w, lie::real_points(t, s));
  EXPECT_EQ(qi::det(im), GaussianRational(1));
  EXPECT_FALSE(s.contains(g.basis_vector(so2n::So2nIndex(4).x(3, 4))));
}

TEST(So2n, CompactFormAndOddRankFailAdmissibility) {
  auto c = so2n::theorem22_report(4, so2n::Form::compact);
  EXPECT_EQ(c.admissible.status, lie::Status::refuted);
  EXPECT_EQ(c.admissible.witness["failed_condition"], "sum");
  auto odd = so2n::theorem22_report(5, so2n::Form::lorentz);
  EXPECT_EQ(odd.admissible.witness["failed_condition"], "nondegenerate");
  auto g = so2n::build_so2n(5);
  Subspace s = so2n::build_s(g, so2n::SubalgebraPreset::standard(5));
  EXPECT_THROW(so2n::build_omega(g, so2n::build_tau_lorentz(g, 5), s, 5), std::invalid_argument);
}

TEST(So2n, DifferentialSquaresToZeroOnConstructedSubalgebras) {
  for (std::size_t n : {3, 4}) {
    auto g = so2n::build_so2n(n);
    EXPECT_NO_THROW(ce::summarize(lie::restrict_to(g, so2n::build_s(g, so2n::SubalgebraPreset::standard(n)))));
    EXPECT_NO_THROW(ce::summarize(lie::restrict_to(g, so2n::cartan(g, so2n::So2nIndex(n)))));
  }
}

TEST(So2n, RootCutsAreCompactStableButNotLorentzStable) {
  so2n::So2nIndex ix(4);
  auto g = so2n::build_so2n(4);
  Subspace h = so2n::cartan(g, ix);
  EXPECT_TRUE(lie::compact_root_cut_fixed(g, so2n::build_tau_compact(g, 4), h).verified());
  // the Lorentz form moves some cut, so the property is not vacuous
  EXPECT_EQ(lie::compact_root_cut_fixed(g, so2n::build_tau_lorentz(g, 4), h).status, lie::Status::refuted);
}
