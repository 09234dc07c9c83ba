#include "subreg/qi/linalg.hpp"
#include "subreg/qi/multipoly.hpp"
#include "subreg/qi/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace subreg::qi;

namespace {

struct Rng {
  std::mt19937 gen{20241014};
  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long span = 5) {
    long den = small(1, 4);
    return Rational(small(-span, span), den);
  }
  GaussianRational gauss(long span = 5) { return {rational(span), rational(span)}; }
  QiMatrix matrix(std::size_t r, std::size_t c, long span = 3) {
    QiMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = gauss(span);
    return m;
  }
  QiMatrix invertible(std::size_t n) {
    // unit upper triangular times unit lower triangular, small entries
    QiMatrix u = QiMatrix::identity(n), l = QiMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        u(i, j) = GaussianRational(small(-1, 1), small(-1, 1));
        l(j, i) = GaussianRational(small(-1, 1), 0);
      }
    return u * l;
  }
};

}  // namespace

TEST(GaussianRational, FieldAxiomsOnRandomElements) {
  Rng rng;
  for (int k = 0; k < 200; ++k) {
    GaussianRational a = rng.gauss(), b = rng.gauss(), c = rng.gauss();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), GaussianRational(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(GaussianRational, StringGrammarRoundTrip) {
  const std::vector<std::string> samples{"0", "3/4", "-1+2/5i", "1i", "-1i", "7-3i", "-2/3i", "5"};
  for (const auto& s : samples) EXPECT_EQ(to_string(parse_gaussian(s)), s) << s;
  EXPECT_EQ(to_string(GaussianRational::i()), "1i");
  EXPECT_EQ(to_string(GaussianRational(Rational(6, 8))), "3/4");
  for (const char* bad : {"", "i", "1.5", "1/0", "2+i", "+3", "1//2", "1 + 2i"})
    EXPECT_THROW(parse_gaussian(bad), std::invalid_argument) << bad;
}

TEST(Linalg, RrefIsCanonicalAndRankMatchesNullity) {
  Rng rng;
  for (int k = 0; k < 40; ++k) {
    auto r = static_cast<std::size_t>(rng.small(1, 6));
    auto c = static_cast<std::size_t>(rng.small(1, 6));
    QiMatrix a = rng.matrix(r, c);
    if (k % 3 == 0 && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * GaussianRational(2, -1);
    RrefResult e = rref(a);
    EXPECT_EQ(rref(e.matrix).matrix, e.matrix);
    EXPECT_EQ(rank(a) + nullspace(a).size(), c);
    for (const auto& v : nullspace(a)) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Linalg, SolveReturnsParticularAndNullspace) {
  Rng rng;
  for (int k = 0; k < 40; ++k) {
    auto r = static_cast<std::size_t>(rng.small(1, 5));
    auto c = static_cast<std::size_t>(rng.small(1, 5));
    QiMatrix a = rng.matrix(r, c);
    QiMatrix x = rng.matrix(c, 1);
    QiMatrix b = a * x;
    auto sol = solve(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * sol->particular, b);
    EXPECT_EQ(sol->nullspace.size(), c - rank(a));
  }
  QiMatrix a{{1, 0}, {1, 0}};
  QiMatrix b{{1}, {2}};
  EXPECT_FALSE(solve(a, b).has_value());
}

TEST(Linalg, DeterminantIsMultiplicative) {
  Rng rng;
  for (int k = 0; k < 30; ++k) {
    auto n = static_cast<std::size_t>(rng.small(1, 5));
    QiMatrix a = rng.matrix(n, n), b = rng.matrix(n, n);
    EXPECT_EQ(det(a * b), det(a) * det(b));
    if (!det(a).is_zero()) {
      EXPECT_EQ(a * inverse(a), QiMatrix::identity(n));
    }
  }
}

TEST(Polynomial, CayleyHamiltonOnRandomMatrices) {
  Rng rng;
  for (int k = 0; k < 40; ++k) {
    auto n = static_cast<std::size_t>(rng.small(1, 6));
    QiMatrix m = rng.matrix(n, n);
    Polynomial p = char_poly(m);
    EXPECT_EQ(p.degree(), static_cast<long>(n));
    EXPECT_TRUE(p(m).is_zero());
    EXPECT_EQ(p.coefficient(n - 1), -m.trace());
  }
}

TEST(Polynomial, JordanChevalleyOnRandomAndConjugatedJordanForms) {
  Rng rng;
  int checked = 0;
  for (int k = 0; k < 120; ++k) {
    auto n = static_cast<std::size_t>(rng.small(1, 8));
    QiMatrix m;
    if (k % 2 == 0) {
      m = rng.matrix(n, n, 2);
    } else {
      // P·J·P⁻¹ with a few repeated eigenvalues and Jordan blocks
      QiMatrix j(n, n);
      std::vector<GaussianRational> eig{GaussianRational(1), GaussianRational(0, 1), GaussianRational(-2)};
      for (std::size_t d = 0; d < n; ++d) {
        j(d, d) = eig[static_cast<std::size_t>(rng.small(0, 2))];
        if (d + 1 < n && rng.small(0, 1) == 1) j(d + 1, d + 1) = j(d, d);
      }
      for (std::size_t d = 0; d + 1 < n; ++d)
        if (j(d, d) == j(d + 1, d + 1) && rng.small(0, 1) == 1) j(d, d + 1) = 1;
      QiMatrix p = rng.invertible(n);
      m = p * j * inverse(p);
    }
    JordanChevalley jc = jordan_chevalley(m);
    EXPECT_EQ(jc.semisimple + jc.nilpotent, m);
    EXPECT_EQ(jc.semisimple * jc.nilpotent, jc.nilpotent * jc.semisimple);
    EXPECT_TRUE(is_nilpotent(jc.nilpotent));
    Polynomial mp = minimal_polynomial(jc.semisimple);
    EXPECT_EQ(squarefree_part(mp).monic(), mp) << "semisimple part has a repeated minimal-polynomial root";
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(MultiPoly, SymbolicPfaffianSquaresToDeterminant) {
  Rng rng;
  for (int k = 0; k < 15; ++k) {
    const std::size_t m = 2 * static_cast<std::size_t>(rng.small(1, 3));
    const std::size_t vars = 3;
    std::vector<std::vector<LinearForm>> upper(m, std::vector<LinearForm>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t v = 0; v < vars; ++v)
          if (long c = rng.small(-2, 2); c != 0) upper[i][j].emplace_back(v, Integer(c));
    MultiPoly pf = symbolic_pfaffian(upper, vars);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> x{rng.rational(), rng.rational(), rng.rational()};
      QiMatrix a(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          Rational e = 0;
          for (const auto& [v, c] : upper[i][j]) e += Rational(c) * x[v];
          a(i, j) = GaussianRational(e);
          a(j, i) = -a(i, j);
        }
      Rational p = pf.evaluate(x);
      EXPECT_EQ(GaussianRational(p * p), det(a));
    }
  }
}
