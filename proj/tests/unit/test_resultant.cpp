#include <gtest/gtest.h>

#include <random>

#include "trisym/einstein/einstein.hpp"
#include "trisym/polysolve/resultant.hpp"

using namespace trisym;

namespace {
BiPolynomial X() { return BiPolynomial::var(Var::X); }
BiPolynomial Y() { return BiPolynomial::var(Var::Y); }
BiPolynomial C(long c) { return BiPolynomial::constant(Rational(c)); }

BiPolynomial random_bipoly(std::mt19937_64& rng, int dx, int dy) {
  std::uniform_int_distribution<long> coef(-5, 5);
  BiPolynomial p;
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j) {
      BiPolynomial t = C(coef(rng));
      for (int n = 0; n < i; ++n) t *= X();
      for (int n = 0; n < j; ++n) t *= Y();
      p += t;
    }
  return p;
}
}  // namespace

TEST(Resultant, EliminateYFromHyperbolaAndLine) {
  const auto r = resultant(X() * Y() - C(1), Y() - C(2), Var::Y);
  EXPECT_TRUE(proportional(r, Polynomial::from_descending({2, -1})));
}

TEST(Resultant, IdenticalInputsGiveZero) {
  const auto p = X() * X() + X() * Y() - C(3);
  EXPECT_TRUE(resultant(p, p, Var::Y).is_zero());
  EXPECT_TRUE(resultant(p, p, Var::X).is_zero());
}

TEST(Resultant, UnivariateAgainstRootProduct) {
  // Res(f, g) = lc(f)^deg g * prod g(roots of f)
  const auto f = Polynomial::from_descending({1, -3, 2});  // roots 1, 2
  const auto g = Polynomial::from_descending({1, 0, 5});
  EXPECT_EQ(resultant(f, g), g.eval(1) * g.eval(2));
  EXPECT_EQ(resultant(f, Polynomial::from_descending({1, -2})), Rational(0));
}

TEST(Resultant, DeterminantSmall) {
  EXPECT_EQ(determinant({{2, 1}, {1, 3}}), Rational(5));
  EXPECT_EQ(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 4}}), Rational(-4));
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), Rational(0));
}

TEST(Resultant, BiPolynomialSubstitution) {
  const auto p = X() * X() * Y() - C(3) * Y() + X();
  EXPECT_EQ(p.substitute(Var::X, 2), Polynomial::from_descending({1, 2}));
  EXPECT_EQ(p.substitute(Var::Y, 1), Polynomial::from_descending({1, 1, -3}));
  EXPECT_EQ(p.eval(2, 5), Rational(7));
  EXPECT_EQ(p.degree(Var::X), 2);
  EXPECT_EQ(p.coeff_in(Var::Y, 1), Polynomial::from_descending({1, 0, -3}));
}

// a common zero of p and q projects to a root of the resultant
TEST(Resultant, VanishesAtProjectedCommonZeroProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> pt(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x0(pt(rng)), y0(pt(rng), 3);
    BiPolynomial p = random_bipoly(rng, 2, 2), q = random_bipoly(rng, 2, 1);
    p -= BiPolynomial::constant(p.eval(x0, y0));
    q -= BiPolynomial::constant(q.eval(x0, y0));
    const auto r = resultant(p, q, Var::Y);
    EXPECT_TRUE(r.is_zero() || r.eval(x0).is_zero()) << p.str() << " | " << q.str();
    const auto s = resultant(p, q, Var::X);
    EXPECT_TRUE(s.is_zero() || s.eval(y0).is_zero());
  }
}

TEST(Resultant, PaperEliminants) {
  const Triple e6{Rational(1, 4), Rational(1, 8), Rational(7, 24)};
  EXPECT_TRUE(proportional(squarefree_part(einstein_eliminant(e6)),
                           Polynomial::from_descending({1200, -4960, 7048, -4152, 855})));
  const Triple e7{Rational(5, 18), Rational(2, 9), Rational(1, 6)};
  EXPECT_TRUE(proportional(squarefree_part(einstein_eliminant(e7)),
                           Polynomial::from_descending({2744, -13482, 24732, -19926, 5832})));
}
