#include <gtest/gtest.h>

#include <algorithm>

#include "trisym/cases/space_case.hpp"
#include "trisym/numeric/errors.hpp"
#include "trisym/rootsys/root_system.hpp"

using namespace trisym;

namespace {
std::array<long, 3> sorted(std::array<long, 3> d) {
  std::sort(d.begin(), d.end());
  return d;
}
bool has(const std::vector<SpaceCase>& cs, const std::string& label, const std::map<std::string, int>& params) {
  return std::any_of(cs.begin(), cs.end(), [&](const SpaceCase& c) { return c.label == label && c.params == params; });
}
}  // namespace

TEST(Cases, RankOneIsOnlyAI) {
  const auto cs = enumerate_cases(1);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].label, "A-I");
  EXPECT_EQ(cs[0].isotropy_type(), "e");
  EXPECT_THROW(enumerate_cases(0), InvalidArgument);
}

TEST(Cases, RankFourContents) {
  const auto cs = enumerate_cases(4);
  EXPECT_TRUE(has(cs, "D-I", {{"l", 4}, {"i", 1}, {"j", 2}}));
  EXPECT_TRUE(has(cs, "F4-I", {}));
  EXPECT_TRUE(has(cs, "F4-II", {}));
  EXPECT_TRUE(has(cs, "A-II", {{"l", 3}}));
  EXPECT_TRUE(has(cs, "A-III", {{"l", 2}, {"i", 1}, {"j", 2}}));
  EXPECT_FALSE(has(cs, "E6-I", {}));
  const auto di = make_case(8, {{"l", 4}, {"i", 1}, {"j", 2}});
  EXPECT_EQ(di.isotropy_type(), "T^2 x A1 x A1");
}

TEST(Cases, RankEightExceptionalRows) {
  std::vector<std::string> exceptional;
  for (const auto& c : enumerate_cases(8))
    if (c.ambient.family == Family::E || c.ambient.family == Family::F) exceptional.push_back(c.label);
  const std::vector<std::string> want{"E6-I", "E6-II", "E6-III", "E7-I", "E7-II", "E7-III", "E8-I", "E8-II", "F4-I", "F4-II"};
  EXPECT_EQ(exceptional, want);
}

TEST(Cases, EnumerationIsOrderedAndUnique) {
  // parameters compare in their declared order (l, i, j)
  auto key = [](const SpaceCase& c) {
    std::vector<int> k{c.inp};
    for (const auto& name : required_params(c.inp)) k.push_back(c.params.at(name));
    return k;
  };
  const auto cs = enumerate_cases(10);
  for (size_t n = 1; n < cs.size(); ++n) {
    EXPECT_LT(key(cs[n - 1]), key(cs[n])) << cs[n].display_name();
    EXPECT_LE(cs[n].ambient.rank, 10);
  }
}

TEST(Cases, InnerDecompositionExamples) {
  EXPECT_EQ(inner_decomposition_dims(build_root_system(Family::A, 2), {{1}, {2}, std::nullopt}),
            (CaseDims{2, {2, 2, 2}}));
  EXPECT_EQ(inner_decomposition_dims(build_root_system(Family::F, 4), {{4}, {3}, std::nullopt}),
            (CaseDims{28, {8, 8, 8}}));
  const auto e7 = select_case("E7-I", {});
  EXPECT_EQ(inner_decomposition_dims(build_root_system(Family::E, 7), e7.marking), (CaseDims{37, {32, 32, 32}}));
}

TEST(Cases, CaseDimsExamples) {
  EXPECT_EQ(case_dims(select_case("A-II", {{"l", 5}})).d, (std::array<long, 3>{8, 12, 6}));
  EXPECT_EQ(case_dims(select_case("E6-III", {})), (CaseDims{24, {14, 28, 12}}));
  EXPECT_EQ(case_dims(select_case("F4-II", {})), (CaseDims{16, {20, 8, 8}}));
  EXPECT_EQ(case_dims(select_case("A-I", {})), (CaseDims{0, {1, 1, 1}}));
}

TEST(Cases, SelectorsAndParameters) {
  EXPECT_EQ(select_case("InP17", {}).label, "E7-II");
  EXPECT_EQ(select_case("e7-ii", {}).inp, 17);
  EXPECT_EQ(select_case("A-II", {{"k", 3}}).params.at("l"), 5);
  EXPECT_EQ(select_case("A-III", {{"l", 2}, {"i", 1}, {"j", 2}}).display_name(), "A-III(l=2,i=1,j=2)");
  EXPECT_THROW(select_case("A-II", {}), InvalidArgument);
  EXPECT_THROW(select_case("A-II", {{"l", 4}}), InvalidArgument);
  EXPECT_THROW(select_case("A-II", {{"l", 5}, {"k", 2}}), InvalidArgument);
  EXPECT_THROW(select_case("E7-II", {{"l", 7}}), InvalidArgument);
  EXPECT_THROW(select_case("G2-I", {}), InvalidArgument);
  EXPECT_THROW(select_case("InP23", {}), InvalidArgument);
  EXPECT_THROW(select_case("A-III", {{"l", 4}, {"i", 2}, {"j", 3}}), InvalidArgument);
  EXPECT_EQ(parse_selector("InP1"), 1);
  EXPECT_EQ(required_params(3), (std::vector<std::string>{"l", "i", "j"}));
}

TEST(Cases, FlaggedRows) {
  int flagged = 0;
  for (const auto& c : enumerate_cases(6)) {
    if (!c.flagged) continue;
    ++flagged;
    EXPECT_TRUE(c.label == "B-II" || c.label == "D-IV") << c.display_name();
  }
  EXPECT_GT(flagged, 0);
  EXPECT_TRUE(select_case("D-IV", {{"l", 4}}).flagged);
}

// dim h + sum d = dim g across the catalog
TEST(Cases, DimensionSumProperty) {
  for (const auto& c : enumerate_cases(12)) {
    const auto d = case_dims(c);
    EXPECT_EQ(d.dim_h + d.d[0] + d.d[1] + d.d[2], dimension(c.ambient)) << c.display_name();
    EXPECT_EQ(d.dim_h, dimension(c.isotropy)) << c.display_name();
    for (int t = 0; t < 3; ++t) EXPECT_GT(d.d[t], 0);
  }
}

TEST(Cases, AIIIProductFormProperty) {
  for (const auto& c : enumerate_cases(12)) {
    if (c.label != "A-III") continue;
    const long l = c.params.at("l"), i = c.params.at("i"), j = c.params.at("j");
    const long n1 = i, n2 = j - i, n3 = l + 1 - j;
    EXPECT_EQ(sorted(case_dims(c).d), sorted({2 * n1 * n2, 2 * n1 * n3, 2 * n2 * n3})) << c.display_name();
  }
}

TEST(Cases, SwappingMarksKeepsDimensionMultisetProperty) {
  int checked = 0;
  for (const auto& c : enumerate_cases(12)) {
    if (!c.inner()) continue;
    const auto rs = build_root_system(c.ambient.family, c.ambient.rank);
    const auto a = inner_decomposition_dims(rs, c.marking);
    const auto b = inner_decomposition_dims(rs, {c.marking.h1_marks, c.marking.h_marks, std::nullopt});
    EXPECT_EQ(a.dim_h, b.dim_h) << c.display_name();
    EXPECT_EQ(sorted(a.d), sorted(b.d)) << c.display_name();
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Cases, MakeCaseRejectsUnknownParameter) {
  EXPECT_THROW(make_case(15, {{"i", 1}}), InvalidArgument);
  EXPECT_THROW(make_case(0, {}), InvalidArgument);
}
