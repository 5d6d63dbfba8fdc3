#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "support/common.hpp"

using namespace closys;
using closys::testing::brute_optimum;
using closys::testing::on;

TEST(Optimum, Ex66) {
  auto s = paper_fixture("ex66");
  auto search = optimum_search(s);
  ASSERT_EQ(search.bases.size(), 2u);
  for (const auto& b : search.bases) {
    EXPECT_TRUE(equivalent(b, s));
    EXPECT_EQ(b.size(), 3u);
    EXPECT_EQ(metrics(b).total.s, 9u);
    EXPECT_EQ(metrics(b).nonbinary.sR, 3u);
  }
  EXPECT_EQ(search.min_left_size(), 5u);
  EXPECT_EQ(search.min_right_size(), 4u);
  EXPECT_EQ(search.min_nonbinary_right_size(), 3u);
}

TEST(Optimum, Example2345) {
  auto s = paper_fixture("2345");
  auto bases = optimum_bases(s);
  ASSERT_EQ(bases.size(), 1u);
  EXPECT_EQ(bases[0], on(s, "2 -> 5\n3 5 -> 2\n4 5 -> 3\n").normalized());
  EXPECT_EQ(min_nonbinary_right_size(s), 2u);
}

TEST(Optimum, TwoKBases) {
  auto s = paper_fixture("2Kbases");
  auto bases = optimum_bases(s);
  EXPECT_EQ(bases.size(), 2u);
  for (const auto& b : bases) EXPECT_EQ(metrics(b).total.s, 17u);
}

TEST(Optimum, MatchesBruteForceOnSmallSystems) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (std::size_t n : {3u, 4u}) {
      auto s = random_system(n, 1.2, seed);
      const auto cap = metrics(canonical_basis(s)).total.s;
      auto brute = brute_optimum(s, cap);
      auto search = optimum_search(s);
      ASSERT_FALSE(search.bases.empty());
      EXPECT_EQ(metrics(search.bases.front()).total.s, brute.size) << "n=" << n << " seed=" << seed;
      EXPECT_EQ(search.bases, brute.bases) << "n=" << n << " seed=" << seed;
      ++compared;
    }
  }
  EXPECT_EQ(compared, 120u);
}

TEST(Optimum, Limits) {
  auto big = random_system(11, 1.0, 1);
  try {
    optimum_search(big);
    FAIL() << "expected the attribute bound";
  } catch (const BoundExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("NP-complete"), std::string::npos);
  }
  SearchLimits one;
  one.max_bases = 1;
  EXPECT_THROW(optimum_search(paper_fixture("ex66"), one), BoundExceeded);
  SearchLimits few;
  few.max_nodes = 1;
  EXPECT_THROW(optimum_search(paper_fixture("2Kbases"), few), BoundExceeded);
}

TEST(Parameters, CoverExample) {
  auto s = paper_fixture("cover");
  const auto& g = s.ground();
  auto b = b_c(s, g.index("a"));
  EXPECT_EQ(b.size, 2u);
  EXPECT_EQ(b.set, g.set_of({"b", "c"}));
  EXPECT_THROW(b_c(s, g.index("d")), PreconditionError);
  EXPECT_EQ(extreme_points(ClosureEngine(s), g.set_of({"b", "c", "d"})), g.set_of({"b", "c"}));
}

TEST(Parameters, KcOfB4double) {
  auto r = b4double_reduction();
  auto w = k_c(r.system, r.distinguished);
  EXPECT_EQ(w.size, 3u);
  const auto& g = r.system.ground();
  EXPECT_EQ(w.set, g.set_of({"q3", "q4", "z"}));
  EXPECT_THROW(k_c(r.system, g.set_of({"q1"})), PreconditionError);
}

TEST(Parameters, ExtremePointsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto s = random_system(6, 1.2, seed);
    ClosureEngine e(s);
    oracle::Oracle o(s);
    for (auto m : o.closed_masks()) {
      auto x = AttrSet::from_mask(6, m);
      ASSERT_EQ(extreme_points(e, x), oracle::set_of(6, o.extreme_points(m)));
    }
  }
}

TEST(Parameters, KcAgainstBruteGenerators) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto s = random_system(6, 1.2, seed);
    auto canon = canonical_basis(s);
    ClosureEngine e(canon);
    for (const auto& imp : canon) {
      const AttrSet c = imp.premise(), phi = c | imp.conclusion();
      std::size_t best = c.count();
      for (std::uint64_t m = 1; m < 64; ++m) {
        auto u = AttrSet::from_mask(6, m);
        if (u.is_subset_of(c) && e.closure(u) == phi) best = std::min(best, u.count());
      }
      EXPECT_EQ(k_c(s, c).size, best) << seed;
    }
  }
}
