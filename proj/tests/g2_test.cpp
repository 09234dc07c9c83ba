#include "subreg/ce/cohomology.hpp"
#include "subreg/ce/existence.hpp"
#include "subreg/g2/survey.hpp"
#include "subreg/lie/root_cut.hpp"
#include "subreg/lie/structure.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <string>

using namespace subreg;
using g2::G2Index;
using g2::G2RootSystem;
using lie::Subspace;
using qi::GaussianRational;
using qi::Vector;

namespace {

const lie::LieAlgebra& g2alg() {
  static const lie::LieAlgebra g = g2::build_g2();
  return g;
}

}  // namespace

TEST(G2Roots, PositiveRootsAndCartanMatrix) {
  G2RootSystem rs;
  std::vector<std::string> names;
  for (const auto& r : rs.positive()) names.push_back(g2::to_string(r));
  EXPECT_EQ(names, (std::vector<std::string>{"alpha", "beta", "alpha+beta", "2alpha+beta", "3alpha+beta",
                                             "3alpha+2beta"}));
  auto a = G2RootSystem::cartan_matrix();
  EXPECT_EQ(a[0][0], 2);
  EXPECT_EQ(a[0][1], -1);
  EXPECT_EQ(a[1][0], -3);
  EXPECT_EQ(a[1][1], 2);
  EXPECT_EQ(rs.all().size(), 12u);
}

TEST(G2Algebra, JacobiExhaustiveAndStructureConstantMagnitudes) {
  const auto& g = g2alg();
  EXPECT_EQ(g.dim(), 14u);
  EXPECT_FALSE(lie::find_antisymmetry_violation(g).has_value());
  EXPECT_FALSE(lie::find_jacobi_violation(g).has_value());
  // |N_{γ,δ}| = p + 1 where δ − pγ starts the γ-string through δ
  g2::G2Structure st = g2::g2_structure();
  G2Index ix(st.roots);
  for (const auto& x : st.roots.all())
    for (const auto& y : st.roots.all()) {
      if (!st.roots.is_root(x + y)) continue;
      int p = st.roots.string(y, x).first;
      EXPECT_EQ(std::abs(st.constant(x, y)), p + 1) << g2::to_string(x) << ", " << g2::to_string(y);
      Vector br = g.bracket(g.basis_vector(ix.x(x)), g.basis_vector(ix.x(y)));
      EXPECT_EQ(br, GaussianRational(st.constant(x, y)) * g.basis_vector(ix.x(x + y)));
    }
}

TEST(G2Algebra, CompactConjugationNegatesRootsAndHasDefiniteKilling) {
  const auto& g = g2alg();
  auto t = g2::build_tau_g2(g2::Form::compact);
  EXPECT_TRUE(t.is_involution());
  EXPECT_FALSE(lie::find_automorphism_violation(g, t).has_value());
  G2RootSystem rs;
  G2Index ix(rs);
  for (const auto& r : rs.all())
    EXPECT_TRUE(lie::apply_tau(t, Subspace::span(14, {g.basis_vector(ix.x(r))})) ==
                Subspace::span(14, {g.basis_vector(ix.x(-r))}));
  // Killing form on the real points is negative definite: all leading
  // principal minors of −κ are positive.
  Subspace real = lie::real_points(t, Subspace::full(14));
  auto basis = real.basis();
  ASSERT_EQ(basis.size(), 14u);
  qi::QiMatrix k = lie::killing_matrix(g);
  qi::QiMatrix gram(14, 14);
  for (std::size_t a = 0; a < 14; ++a)
    for (std::size_t b = 0; b < 14; ++b) {
      GaussianRational acc;
      for (std::size_t i = 0; i < 14; ++i)
        for (std::size_t j = 0; j < 14; ++j) acc += basis[a][i] * k(i, j) * basis[b][j];
      ASSERT_TRUE(acc.is_real());
      gram(a, b) = -acc;
    }
  for (std::size_t m = 1; m <= 14; ++m) {
    qi::QiMatrix lead(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) lead(a, b) = gram(a, b);
    EXPECT_GT(sgn(qi::det(lead).re()), 0) << "minor " << m;
  }
  auto split = g2::build_tau_g2(g2::Form::split);
  EXPECT_TRUE(split.is_involution());
  EXPECT_FALSE(lie::find_automorphism_violation(g, split).has_value());
}

TEST(G2Cohomology, BorelSecondBettiAndRepresentative) {
  const auto& g = g2alg();
  Subspace b = g2::borel(g);
  EXPECT_EQ(b.dim(), 8u);
  auto sum = ce::summarize(lie::restrict_to(g, b));
  EXPECT_EQ(sum.betti[0], 1u);
  EXPECT_EQ(sum.betti[1], 2u);
  EXPECT_EQ(sum.betti[2], 1u);
  auto reps = ce::h2_representatives(g, b);
  ASSERT_EQ(reps.size(), 1u);
  Subspace bb = lie::bracket_span(g, b, b);
  EXPECT_TRUE(bb == g2::nilradical(g));
  // ω vanishes on every pair of basis vectors meeting [b, b]
  G2RootSystem rs;
  G2Index ix(rs);
  std::vector<Vector> basis{g.basis_vector(0), g.basis_vector(1)};
  for (const auto& r : rs.positive()) basis.push_back(g.basis_vector(ix.x(r)));
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (bb.contains(x) || bb.contains(y)) {
        EXPECT_TRUE(reps[0](x, y).is_zero());
      }
  EXPECT_FALSE(reps[0](basis[0], basis[1]).is_zero());
  EXPECT_TRUE(lie::is_closed(g, reps[0]).verified());
}

TEST(G2Cohomology, LinePlusNilradicalHasNoSecondCohomology) {
  const auto& g = g2alg();
  for (const auto& line : g2::sample_lines()) {
    Subspace s = g2::build_candidate(g, g2::CandidateKind::L_plus_n, line);
    EXPECT_EQ(s.dim(), 7u);
    EXPECT_EQ(ce::betti(g, s, 2), 0u);
  }
}

TEST(G2Cohomology, UniquePrimitiveOnNilradicalSupport) {
  const auto& g = g2alg();
  Subspace b = g2::borel(g);
  EXPECT_TRUE(ce::unique_primitive(g, b, g2::nilradical(g)).verified());
  // functionals on h are closed, so uniqueness fails once h is allowed
  EXPECT_FALSE(ce::unique_primitive(g, b, b).verified());
}

TEST(G2Survey, CompactFormHasExactlyTwoCapableKinds) {
  const auto& g = g2alg();
  auto certs = g2::survey(g, g2::Form::compact);
  ASSERT_EQ(certs.size(), 7u);
  std::set<std::string> capable;
  for (const auto& c : certs) {
    if (c.verified()) capable.insert(c.witness["kind"].get<std::string>());
    else EXPECT_FALSE(c.details.empty());
  }
  EXPECT_EQ(capable, (std::set<std::string>{"L_plus_n", "borel"}));
  EXPECT_EQ(certs[1].witness["closed_forms"]["condition"], "Im(c) ≠ 0");
  for (const auto& line : certs[0].witness["sampled_lines"])
    EXPECT_EQ(line["line_test"]["status"], "verified") << line["line"].dump();
}

TEST(G2Survey, SplitFormRunsWithNote) {
  const auto& g = g2alg();
  auto certs = g2::survey(g, g2::Form::split);
  ASSERT_EQ(certs.size(), 7u);
  for (const auto& c : certs) EXPECT_TRUE(c.witness.contains("note"));
}

TEST(G2Survey, ThirdSubalgebraFailsUnderBothForms) {
  const auto& g = g2alg();
  Subspace s3 = g2::build_s3(g);
  EXPECT_TRUE(lie::is_subalgebra(g, s3).verified());
  EXPECT_EQ(s3.dim(), 7u);
  for (auto f : {g2::Form::compact, g2::Form::split}) {
    auto c = g2::admissibility_capability(g, g2::build_tau_g2(f), s3, "s3");
    EXPECT_EQ(c.status, lie::Status::refuted) << c.details;
  }
}

TEST(G2Survey, RootCutsAreStableUnderCompactForm) {
  const auto& g = g2alg();
  EXPECT_TRUE(lie::compact_root_cut_fixed(g, g2::build_tau_g2(g2::Form::compact), g2::cartan(g)).verified());
}

TEST(G2Survey, ParametrizationConstants) {
  auto j = g2::parametrization_constants(g2alg(), g2::Form::compact);
  EXPECT_EQ(j["dim_hom_bb"], 6);
  EXPECT_EQ(j["sigma0_condition"], "Im(c) ≠ 0");
}

TEST(ClosedForms, ExistenceMatchesTheOddAndTrivialCases) {
  const auto& g = g2alg();
  auto t = g2::build_tau_g2(g2::Form::compact);
  // h alone: real points 2-dim, every 2-form on an abelian algebra is closed
  Subspace h = g2::cartan(g);
  auto ex = ce::closed_form_existence(g, h, lie::real_points(t, h));
  EXPECT_TRUE(ex.exists);
  EXPECT_EQ(ex.h2_dim, 1u);
  // a real line in h: odd-dimensional real points
  Subspace l = Subspace::span(14, {g.basis_vector(0)});
  auto ex1 = ce::closed_form_existence(g, l, lie::real_points(t, l));
  EXPECT_EQ(ex1.real_points_dim, 1u);
  EXPECT_FALSE(ex1.exists);
}
