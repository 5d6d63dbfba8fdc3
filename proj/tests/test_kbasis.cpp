#include <gtest/gtest.h>

#include "support/common.hpp"

using namespace closys;
using closys::testing::on;

TEST(KBasis, TwoKBases) {
  auto s = paper_fixture("2Kbases");
  auto k = k_basis(s);
  EXPECT_EQ(metrics(k).total.s, 17u);
  auto all = all_k_bases(s);
  ASSERT_EQ(all.size(), 2u);
  std::vector<Implication> only0, only1;
  for (const auto& imp : all[0])
    if (std::find(all[1].begin(), all[1].end(), imp) == all[1].end()) only0.push_back(imp);
  for (const auto& imp : all[1])
    if (std::find(all[0].begin(), all[0].end(), imp) == all[0].end()) only1.push_back(imp);
  ASSERT_EQ(only0.size(), 1u);
  ASSERT_EQ(only1.size(), 1u);
  const auto& g = s.ground();
  std::set<AttrSet> premises{only0[0].premise(), only1[0].premise()};
  EXPECT_EQ(premises, (std::set<AttrSet>{g.set_of({"y", "d"}), g.set_of({"x", "d"})}));
  EXPECT_EQ(only0[0].conclusion(), g.set_of({"e"}));
  EXPECT_EQ(only1[0].conclusion(), g.set_of({"e"}));
  for (const auto& b : all) EXPECT_TRUE(equivalent(b, s));
}

TEST(KBasis, TiebreakPicksEitherBasis) {
  auto s = paper_fixture("2Kbases");
  auto first = k_basis(s, Tiebreak::First), last = k_basis(s, Tiebreak::Last);
  auto all = all_k_bases(s);
  EXPECT_NE(std::find(all.begin(), all.end(), first), all.end());
  EXPECT_NE(std::find(all.begin(), all.end(), last), all.end());
  EXPECT_NE(first, last);
  EXPECT_EQ(parse_tiebreak("last"), Tiebreak::Last);
  EXPECT_THROW(parse_tiebreak("middle"), Error);
}

TEST(KBasis, SdFailsHasOnlyTheCanonicalBasis) {
  auto s = paper_fixture("SD+fails");
  auto all = all_k_bases(s);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], canonical_basis(s));
}

TEST(KBasis, OrderGenerator) {
  auto s = paper_fixture("cover");
  auto c = canonical_basis(s);
  ClosureEngine e(c);
  auto ord = phi_order(c);
  const auto& g = s.ground();
  EXPECT_EQ(minimal_order_generator(e, ord, g.set_of({"b", "c", "d"})), g.set_of({"b", "c"}));
  EXPECT_THROW(minimal_order_generator(e, ord, g.set_of({"a"})), PreconditionError);
}

TEST(KBasis, RequiresStandard) { EXPECT_THROW(k_basis(closys::testing::sys("a -> b\nb -> a\n")), NotStandardError); }

TEST(KBasis, PropertiesOnRandomSystems) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto s = random_system(6, 1.2, seed);
    auto c = canonical_basis(s);
    auto k = k_basis(s);
    ASSERT_TRUE(equivalent(k, s)) << seed;
    EXPECT_EQ(k.size(), c.size());
    EXPECT_LE(metrics(k).total.s, metrics(c).total.s);
    auto ord = phi_order(c);
    ClosureEngine e(c);
    for (const auto& imp : k) {
      EXPECT_EQ(ord.max_elements(imp.conclusion()), imp.conclusion());
      EXPECT_TRUE(imp.conclusion().is_subset_of(e.closure(imp.premise())));
    }
    for (const auto& b : all_k_bases(s)) EXPECT_TRUE(equivalent(b, s));
  }
}
