#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "trisym/numeric/errors.hpp"
#include "trisym/polysolve/sturm.hpp"
#include "trisym/verify/verify.hpp"

using namespace trisym;

namespace {
const Polynomial kE6III = Polynomial::from_descending({1200, -4960, 7048, -4152, 855});
const Polynomial kE7II = Polynomial::from_descending({2744, -13482, 24732, -19926, 5832});

double mid(const IsolatingInterval& iv) { return iv.midpoint().to_double(); }

bool brackets(const IsolatingInterval& iv, const Rational& r) {
  return iv.exact ? *iv.exact == r : (iv.lo < r && r < iv.hi);
}
}  // namespace

TEST(Sturm, ChainOfXSquaredMinusTwo) {
  const auto chain = sturm_sequence(Polynomial::from_descending({1, 0, -2}));
  const std::vector<Polynomial> want{Polynomial::from_descending({1, 0, -2}), Polynomial::from_descending({2, 0}),
                                     Polynomial::constant(2)};
  EXPECT_EQ(chain, want);
}

TEST(Sturm, RepeatedRootCountedOnce) {
  const auto p = Polynomial::from_descending({1, -2, 1});
  EXPECT_EQ(count_real_roots(p, Endpoint(0), Endpoint(2)), 1);
  EXPECT_EQ(isolate_real_roots(p, Endpoint(0), Endpoint(2)).size(), 1u);
}

TEST(Sturm, CountsOnHalfLines) {
  EXPECT_EQ(count_real_roots(Polynomial::from_descending({1, 0, -2}), Endpoint(0), Endpoint::pos_inf()), 1);
  EXPECT_EQ(count_real_roots(Polynomial::from_descending({1, 0, -2}), Endpoint::neg_inf(), Endpoint::pos_inf()), 2);
  EXPECT_EQ(count_real_roots(Polynomial::from_descending({1, 0, 1}), Endpoint::neg_inf(), Endpoint::pos_inf()), 0);
  EXPECT_EQ(count_real_roots(kE6III, Endpoint(0), Endpoint::pos_inf()), 2);
  EXPECT_EQ(count_real_roots(kE7II, Endpoint(0), Endpoint::pos_inf()), 2);
}

TEST(Sturm, RootsOnEndpointsAreExcluded) {
  const auto p = Polynomial::from_descending({1, 0, -1});
  EXPECT_EQ(count_real_roots(p, Endpoint(-1), Endpoint(1)), 0);
  EXPECT_EQ(count_real_roots(p, Endpoint(-1), Endpoint(2)), 1);
  EXPECT_EQ(count_real_roots(p, Endpoint(1), Endpoint::pos_inf()), 0);
  EXPECT_EQ(count_real_roots(p, Endpoint::neg_inf(), Endpoint(-1)), 0);
  EXPECT_EQ(count_real_roots(p, Endpoint(0), Endpoint(1)), 0);
}

TEST(Sturm, DegenerateInputsThrow) {
  EXPECT_THROW(count_real_roots(Polynomial(), Endpoint(0), Endpoint(1)), InvalidArgument);
  EXPECT_THROW(count_real_roots(Polynomial::x(), Endpoint(1), Endpoint(1)), InvalidArgument);
  EXPECT_THROW(count_real_roots(Polynomial::x(), Endpoint(2), Endpoint(1)), InvalidArgument);
  EXPECT_THROW(sturm_sequence(Polynomial()), InvalidArgument);
}

TEST(Sturm, AIIQuarticAtKEqualsTwo) {
  const Polynomial u0 = verify::a2_quartic(2);
  EXPECT_EQ(u0, Polynomial::from_descending({192, -704, 848, -408, 63}));
  const auto chain = sturm_sequence(u0);
  EXPECT_EQ(sign_variations(chain, Endpoint(0)) - sign_variations(chain, Endpoint::pos_inf()), 2);
  EXPECT_EQ(verify::numeric_root_count(u0, 0.0, HUGE_VAL), 2);
}

TEST(Isolate, SimpleQuadratic) {
  const auto ivs = isolate_real_roots(Polynomial::from_descending({1, -3, 2}), Endpoint(0), Endpoint(10));
  ASSERT_EQ(ivs.size(), 2u);
  EXPECT_TRUE(brackets(ivs[0], 1));
  EXPECT_TRUE(brackets(ivs[1], 2));
}

TEST(Isolate, PaperQuartics) {
  auto ivs = isolate_real_roots(kE6III, Endpoint(0), Endpoint::pos_inf());
  ASSERT_EQ(ivs.size(), 2u);
  EXPECT_NEAR(mid(refine_root(ivs[0], Rational(1, 100000000))), 0.4838, 5e-5);
  const auto r = refine_root(ivs[1], Rational(1, 100000000));
  EXPECT_EQ(r.midpoint().to_decimal(4), "1.8845");

  ivs = isolate_real_roots(kE7II, Endpoint(0), Endpoint::pos_inf());
  ASSERT_EQ(ivs.size(), 2u);
  EXPECT_NEAR(mid(refine_root(ivs[0], Rational(1, 100000000))), 0.7302, 5e-5);
  EXPECT_NEAR(mid(refine_root(ivs[1], Rational(1, 100000000))), 1.5535, 5e-5);
}

TEST(Isolate, IntervalsAreDisjointAndCertified) {
  const auto p = Polynomial::from_descending({1, 0, -10, 0, 9, 0});  // roots 0, +-1, +-3
  const auto ivs = isolate_real_roots(p, Endpoint::neg_inf(), Endpoint::pos_inf());
  ASSERT_EQ(ivs.size(), 5u);
  for (size_t n = 0; n < ivs.size(); ++n) {
    if (n) {
      EXPECT_LE(ivs[n - 1].hi, ivs[n].exact ? *ivs[n].exact : ivs[n].lo);
    }
    if (!ivs[n].exact) {
      EXPECT_EQ(count_real_roots(p, Endpoint(ivs[n].lo), Endpoint(ivs[n].hi)), 1);
      EXPECT_NE(p.sign_at(ivs[n].lo), p.sign_at(ivs[n].hi));
    }
  }
}

TEST(Refine, SquareRootOfTwo) {
  const auto p = Polynomial::from_descending({1, 0, -2});
  const auto r = refine_root({Rational(1), Rational(2), p, std::nullopt}, Rational(1, 1000000));
  EXPECT_LE(r.width(), Rational(1, 1000000));
  EXPECT_LT(r.lo * r.lo, Rational(2));
  EXPECT_GT(r.hi * r.hi, Rational(2));
  EXPECT_EQ(r.midpoint().to_decimal(5), "1.41421");
}

TEST(Refine, QuadraticFromTheE8Case) {
  const auto p = Polynomial::from_descending({7, -15, 7});
  const auto ivs = isolate_real_roots(p, Endpoint(0), Endpoint(1));
  ASSERT_EQ(ivs.size(), 1u);
  const auto r = refine_root(ivs[0], Rational(1, 1000000000000L));
  EXPECT_NEAR(mid(r), (15.0 - std::sqrt(29.0)) / 14.0, 1e-10);
}

TEST(Refine, NestedAndMonotoneProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-20, 20);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> c;
    for (int n = 0; n < 6; ++n) c.emplace_back(coef(rng));
    c.emplace_back(1);
    const Polynomial p(c);
    for (const auto& iv : isolate_real_roots(p, Endpoint::neg_inf(), Endpoint::pos_inf())) {
      if (iv.exact) continue;
      IsolatingInterval prev = iv;
      for (int e = 4; e <= 40; e += 12) {
        const auto r = refine_root(prev, Rational::pow2(-e));
        EXPECT_GE(r.lo, prev.lo);
        EXPECT_LE(r.hi, prev.hi);
        EXPECT_LE(r.width(), Rational::pow2(-e));
        if (!r.exact) {
          EXPECT_NE(r.poly.sign_at(r.lo), r.poly.sign_at(r.hi));
        }
        prev = r;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Refine, RejectsBadWidth) {
  const IsolatingInterval iv{Rational(1), Rational(2), Polynomial::from_descending({1, 0, -2}), std::nullopt};
  EXPECT_THROW(refine_root(iv, Rational(0)), InvalidArgument);
}

TEST(Sturm, CauchyBoundEnclosesRoots) {
  const auto p = Polynomial::from_descending({1, -3, 2});
  EXPECT_GT(cauchy_bound(p), Rational(2));
  EXPECT_GT(cauchy_bound(kE7II), Rational(2));
}
