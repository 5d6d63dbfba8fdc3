#include <gtest/gtest.h>

#include "support/common.hpp"

using namespace closys;
using closys::testing::on;
using closys::testing::sys;

TEST(DRelation, A12SigmaStar) {
  auto s = paper_fixture("A12");
  auto star = sigma_star(s);
  EXPECT_EQ(star.nonbinary_part(), on(s, "1 4 -> 3\n2 3 -> 6\n1 5 -> 6\n2 4 -> 5\n").normalized());
  EXPECT_EQ(star.binary_part(), canonical_basis(s).binary_part());
  auto d = oracle::d_basis(s);
  EXPECT_EQ(d.nonbinary_part(), on(s, "1 4 -> 3\n2 3 -> 6\n1 5 -> 6\n2 4 -> 5\n2 4 -> 6\n").normalized());
}

TEST(DRelation, A12DeltaOfCanonicalOverreaches) {
  auto s = paper_fixture("A12");
  const auto& g = s.ground();
  auto plain = delta(canonical_basis(s));
  EXPECT_TRUE(plain.contains(g.index("6"), g.index("5")));
  auto dual_tr = transitive_closure(oracle::d_relation(s).dual());
  EXPECT_FALSE(dual_tr.contains(g.index("6"), g.index("5")));
  EXPECT_EQ(transitive_closure(delta(sigma_star(s))), dual_tr);
}

TEST(DRelation, DeltaNeedsRegularInput) {
  EXPECT_THROW(delta(parse(closys::testing::read_fixture("regularize.imp"))), NotRegularError);
}

TEST(DRelation, Cycles) {
  auto co4 = paper_fixture("Co4");
  auto c = d_cycle(co4);
  ASSERT_TRUE(c);
  EXPECT_EQ(format_cycle(co4.ground(), *c), "b→c→b");
  EXPECT_FALSE(is_d_cycle_free(co4));
  EXPECT_THROW(require_d_cycle_free(co4), DCycleError);
  EXPECT_FALSE(is_d_cycle_free(paper_fixture("2Kbases")));
  EXPECT_TRUE(is_d_cycle_free(paper_fixture("A12")));
  EXPECT_TRUE(is_d_cycle_free(paper_fixture("cover")));
  EXPECT_TRUE(is_d_cycle_free(sys("ground: a b\n")));
}

TEST(DRelation, CycleFreedomAgreesWithOracle) {
  std::size_t free = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto s = random_system(6, 1.2, seed);
    const bool ours = is_d_cycle_free(s);
    EXPECT_EQ(ours, !has_cycle(oracle::d_relation(s))) << seed;
    free += ours;
  }
  EXPECT_GT(free, 10u);
  EXPECT_LT(free, 110u);
}

TEST(DRelation, TransitiveClosuresAgreeOnRandomSystems) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto s = random_system(6, 1.2, seed);
    auto d_dual = oracle::d_relation(s).dual();
    auto star = delta(sigma_star(s));
    EXPECT_TRUE(star.is_subset_of(d_dual)) << seed;
    EXPECT_EQ(transitive_closure(star), transitive_closure(d_dual)) << seed;
  }
}
