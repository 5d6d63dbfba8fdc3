#include <gtest/gtest.h>

#include "support/common.hpp"

using namespace closys;
using closys::testing::sys;

TEST(Canonical, TwoKBasesSize) {
  auto c = canonical_basis(paper_fixture("2Kbases"));
  EXPECT_EQ(metrics(c).total.s, 24u);
  EXPECT_EQ(c.size(), 7u);
}

TEST(Canonical, MatchesOracleOnFixtures) {
  for (const auto& name : fixture_names()) {
    auto s = paper_fixture(name);
    if (s.universe() > 14) continue;
    EXPECT_EQ(canonical_basis(s), oracle::canonical_oracle(s)) << name;
  }
}

TEST(Canonical, IndependentOfInputForm) {
  auto s = paper_fixture("A12");
  auto c = canonical_basis(s);
  EXPECT_EQ(canonical_basis(unit_expansion(s)), c);
  EXPECT_EQ(canonical_basis(k_basis(s)), c);
  auto reversed = ImplicationSet(s.ground(), {s.implications().rbegin(), s.implications().rend()});
  EXPECT_EQ(canonical_basis(reversed), c);
  EXPECT_EQ(canonical_basis(c), c);
}

TEST(Canonical, NextClosureRoute) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto s = random_system(6, 1.2, seed);
    ClosureEngine e(s);
    auto nc = canonical_basis_from_closure(s.ground(), [&](const AttrSet& x) { return e.closure(x); });
    EXPECT_EQ(nc.normalized(), canonical_basis(s)) << seed;
  }
}

TEST(Canonical, EmptyAndTrivial) {
  EXPECT_TRUE(canonical_basis(sys("ground: a b\n")).empty());
  auto s = sys("ground: a b\na -> b\na -> b\n");
  EXPECT_EQ(canonical_basis(s).size(), 1u);
}

TEST(Saturation, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = random_system(6, 1.3, seed);
    Saturator sat(canonical_basis(s));
    for (std::uint64_t m = 0; m < 64; ++m) {
      auto x = AttrSet::from_mask(6, m);
      ASSERT_EQ(sat(x), oracle::saturation_oracle(s, x));
    }
  }
}

TEST(Saturation, B4double) {
  auto r = b4double_reduction();
  const auto& g = r.system.ground();
  EXPECT_EQ(saturation(canonical_basis(r.system), g.set_of({"z", "q3", "q4"})), g.set_of({"q1", "q2", "q3", "q4", "z"}));
}

TEST(Regularize, Example) {
  auto s = parse(closys::testing::read_fixture("regularize.imp"));
  EXPECT_FALSE(is_regular(s));
  auto r = regularize(s);
  EXPECT_EQ(r, closys::testing::on(s, "a -> b c\nb c -> d\n").normalized());
  EXPECT_TRUE(is_regular(r));
  EXPECT_TRUE(equivalent(r, s));
}

TEST(Regularize, KeepsRegularInput) {
  auto s = paper_fixture("A12");
  ASSERT_TRUE(is_regular(s));
  EXPECT_EQ(regularize(s), aggregation(s).normalized());
}

TEST(UC, Examples) {
  EXPECT_FALSE(is_uc_system(paper_fixture("ex66")));
  EXPECT_TRUE(is_uc_system(paper_fixture("2Kbases")));
}

TEST(UC, AgreesWithOracleClosures) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto s = random_system(5, 1.2, seed);
    auto cat = oracle::quasi_critical(s);
    EXPECT_EQ(is_uc_system(s), cat.critical.size() == cat.essential.size()) << seed;
  }
}
