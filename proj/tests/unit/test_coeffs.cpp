#include <gtest/gtest.h>

#include "trisym/cases/space_case.hpp"
#include "trisym/coeffs/isotropy.hpp"
#include "trisym/numeric/errors.hpp"

using namespace trisym;

namespace {
using R3 = std::array<Rational, 3>;
R3 r3(Rational a, Rational b, Rational c) { return {a, b, c}; }
IsotropyData coeffs(const std::string& sel, std::map<std::string, int> p = {}) {
  return coefficients_for_case(select_case(sel, p));
}
}  // namespace

TEST(Coeffs, KillingRatios) {
  EXPECT_EQ(gamma_from_killing_ratio({Family::D, 6}, {Family::E, 7}, 1), Rational(5, 9));
  EXPECT_EQ(gamma_from_killing_ratio({Family::D, 8}, {Family::E, 8}, 1), Rational(7, 15));
  EXPECT_EQ(gamma_from_killing_ratio({Family::A, 7}, {Family::E, 7}, 1), Rational(4, 9));
  EXPECT_EQ(gamma_from_killing_ratio({Family::B, 4}, {Family::F, 4}, 1), Rational(7, 9));
  for (int k = 2; k <= 12; ++k)
    EXPECT_EQ(gamma_from_killing_ratio({Family::C, k}, {Family::A, 2 * k - 1}, 1), Rational(k + 1, 2 * k)) << k;
  EXPECT_EQ(gamma_from_killing_ratio({Family::A, 1}, {Family::A, 2}, 2), Rational(1, 3));
  EXPECT_THROW(gamma_from_killing_ratio({Family::T, 1}, {Family::E, 6}, 1), Unsupported);
  EXPECT_THROW(gamma_from_killing_ratio({Family::A, 1}, {Family::E, 6}, 0), InvalidArgument);
}

TEST(Coeffs, DeriveGammasExamples) {
  const auto e6 = derive_gammas({14, 28, 12}, 1, Rational(1, 2));
  EXPECT_EQ(e6.gammas, r3(Rational(1, 2), Rational(3, 4), Rational(5, 12)));
  EXPECT_EQ(e6.a, r3(Rational(1, 4), Rational(1, 8), Rational(7, 24)));
  const auto e7 = derive_gammas({24, 30, 40}, 2, Rational(5, 9));
  EXPECT_EQ(e7.gammas, r3(Rational(4, 9), Rational(5, 9), Rational(2, 3)));
  EXPECT_EQ(e7.a, r3(Rational(5, 18), Rational(2, 9), Rational(1, 6)));
  const auto eq = derive_gammas({9, 9, 9}, 3, Rational(3, 7));
  EXPECT_EQ(eq.gammas, r3(Rational(3, 7), Rational(3, 7), Rational(3, 7)));
  EXPECT_EQ(eq.a[0], eq.a[2]);
}

TEST(Coeffs, DeriveGammasRejectsOutOfRange) {
  EXPECT_THROW(derive_gammas({100, 1, 1}, 1, Rational(1, 2)), InconsistencyError);
  // a bad anchor is a caller error, a bad derived value an inconsistency
  EXPECT_THROW(derive_gammas({1, 1, 1}, 1, Rational(0)), InvalidArgument);
  EXPECT_THROW(derive_gammas({1, 1, 1}, 1, Rational(1)), InvalidArgument);
  EXPECT_NO_THROW(derive_gammas({1, 1, 1}, 1, Rational(0), true));
  EXPECT_THROW(derive_gammas({1, 1, 1}, 4, Rational(1, 2)), InvalidArgument);
  EXPECT_THROW(derive_gammas({0, 1, 1}, 1, Rational(1, 2)), InvalidArgument);
}

TEST(Coeffs, PrintedCaseValues) {
  EXPECT_EQ(coeffs("F4-I").a, r3(Rational(1, 9), Rational(1, 9), Rational(1, 9)));
  EXPECT_EQ(coeffs("E8-I").a, r3(Rational(4, 15), Rational(1, 5), Rational(1, 5)));
  EXPECT_EQ(coeffs("E8-I").gammas, r3(Rational(7, 15), Rational(3, 5), Rational(3, 5)));
  EXPECT_EQ(coeffs("A-II", {{"k", 3}}).a, r3(Rational(1, 4), Rational(1, 6), Rational(1, 3)));
  EXPECT_EQ(coeffs("E6-II").a, r3(Rational(1, 4), Rational(1, 4), Rational(1, 6)));
  EXPECT_EQ(coeffs("E6-II").gammas, r3(Rational(1, 2), Rational(1, 2), Rational(2, 3)));
  EXPECT_EQ(coeffs("E7-I").a, r3(Rational(2, 9), Rational(2, 9), Rational(2, 9)));
  EXPECT_EQ(coeffs("E7-III").a, r3(Rational(5, 18), Rational(5, 18), Rational(5, 18)));
  EXPECT_EQ(coeffs("E8-II").a, r3(Rational(4, 15), Rational(4, 15), Rational(4, 15)));
  EXPECT_EQ(coeffs("F4-II").a, r3(Rational(1, 9), Rational(5, 18), Rational(5, 18)));
  EXPECT_EQ(coeffs("F4-II").gammas, r3(Rational(7, 9), Rational(4, 9), Rational(4, 9)));
  EXPECT_EQ(coeffs("A-III", {{"l", 2}, {"i", 1}, {"j", 2}}).a, r3(Rational(1, 6), Rational(1, 6), Rational(1, 6)));
}

TEST(Coeffs, AIIClosedForms) {
  for (int k = 2; k <= 50; ++k) {
    const auto iso = coeffs("A-II", {{"k", k}});
    EXPECT_EQ(iso.gammas, r3(Rational(1, 2), Rational(k + 1, 2 * k), Rational(k - 1, 2 * k))) << k;
    EXPECT_EQ(iso.a, r3(Rational(1, 4), Rational(k - 1, 4 * k), Rational(k + 1, 4 * k))) << k;
  }
}

TEST(Coeffs, BoundaryCases) {
  const auto ai = coeffs("A-I");
  EXPECT_EQ(ai.a, r3(Rational(1, 2), Rational(1, 2), Rational(1, 2)));
  EXPECT_TRUE(ai.boundary());
  EXPECT_FALSE(coeffs("E7-II").boundary());
  EXPECT_EQ(anchor_for_case(select_case("A-I", {})).gamma, Rational(0));
  EXPECT_EQ(anchor_for_case(select_case("D-IV", {{"l", 4}})).source, "trivial-action");
  EXPECT_EQ(anchor_for_case(select_case("E6-I", {})).source, "killing-ratio");
  EXPECT_EQ(anchor_for_case(select_case("E6-III", {})).source, "tabulated");
}

// c = gamma/2, a = A/d = (1 - gamma)/2, d(1 - gamma) constant
TEST(Coeffs, IdentitiesOnEveryCaseProperty) {
  for (const auto& c : enumerate_cases(12)) {
    const auto iso = coefficients_for_case(c);
    EXPECT_EQ(iso.dims, case_dims(c).d) << c.display_name();
    const Rational w = Rational(iso.dims[0]) * (Rational(1) - iso.gammas[0]);
    for (int t = 0; t < 3; ++t) {
      EXPECT_EQ(Rational(iso.dims[t]) * (Rational(1) - iso.gammas[t]), w) << c.display_name();
      EXPECT_EQ(iso.casimirs[t], iso.gammas[t] / 2);
      EXPECT_EQ(iso.a[t], iso.A / Rational(iso.dims[t]));
      EXPECT_EQ(iso.a[t], (Rational(1) - iso.gammas[t]) / 2);
      EXPECT_GT(iso.a[t], Rational(0));
      EXPECT_LE(iso.a[t], Rational(1, 2));
    }
    EXPECT_EQ(iso.A * 2, w);
  }
}

// any block with a simple effective factor anchors the same data
TEST(Coeffs, AnchorIndependenceProperty) {
  int multi = 0;
  for (const auto& c : enumerate_cases(12)) {
    const auto iso = coefficients_for_case(c);
    const auto anchors = killing_ratio_anchors(c);
    if (anchors.size() > 1) ++multi;
    for (const auto& an : anchors) {
      EXPECT_EQ(derive_gammas(iso.dims, an.index, an.gamma, true), iso)
          << c.display_name() << " anchored on block " << an.index;
    }
  }
  EXPECT_GT(multi, 10);
}
