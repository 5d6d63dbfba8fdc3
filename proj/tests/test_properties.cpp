#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "support/common.hpp"
#include "support/suites.hpp"

using namespace closys;
using namespace closys::testing;

namespace {

std::string failures(const std::vector<CheckResult>& checks) {
  std::string out;
  for (const auto& c : checks)
    if (!c.pass && !c.informational) out += c.name + " (" + c.details + "); ";
  return out;
}

}  // namespace

TEST(Properties, CanonicalBasis) {
  std::mt19937_64 rng(5);
  for (const auto& s : random_suite()) {
    const auto c = canonical_basis(s);
    ASSERT_TRUE(equivalent(c, s));
    EXPECT_EQ(canonical_basis(c), c);
    EXPECT_EQ(c, oracle::canonical_oracle(s));
    auto shuffled = s.implications();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(canonical_basis(ImplicationSet(s.ground(), shuffled)), c);
    EXPECT_EQ(canonical_basis(unit_expansion(s)), c);
    EXPECT_EQ(canonical_basis(s + c), c);
  }
}

TEST(Properties, Saturation) {
  for (const auto& s : random_suite()) {
    oracle::Oracle o(s);
    Saturator sat(canonical_basis(s));
    for (oracle::Mask m = 0; m <= o.full(); ++m)
      ASSERT_EQ(sat(oracle::set_of(s.universe(), m)), oracle::set_of(s.universe(), o.saturation(m)));
  }
}

TEST(Properties, Regularize) {
  std::size_t changed = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto s = random_system(3 + seed % 5, 1.5, 7000 + seed);
    auto before = metrics(aggregation(s)).total;
    auto r = regularize(s);
    auto after = metrics(r).total;
    ASSERT_TRUE(is_regular(r)) << seed;
    ASSERT_TRUE(equivalent(r, s)) << seed;
    EXPECT_LE(after.count, before.count);
    EXPECT_LE(after.sL, before.sL);
    EXPECT_LE(after.sR, before.sR);
    changed += !(r == aggregation(s).normalized());
  }
  EXPECT_GT(changed, 0u);
}

TEST(Properties, MainEOnDCycleFreeSystems) {
  std::size_t n = 0;
  for (const auto& s : random_suite()) {
    if (!is_d_cycle_free(s)) continue;
    ++n;
    auto checks = verify_main_e(s);
    EXPECT_TRUE(all_pass(checks)) << to_text(s) << failures(checks);
  }
  EXPECT_GT(n, 40u);
}

TEST(Properties, RsMinOnDCycleFreeSystems) {
  for (const auto& s : random_suite()) {
    if (!is_d_cycle_free(s)) continue;
    auto checks = verify_rs_min(s);
    EXPECT_TRUE(all_pass(checks)) << to_text(s) << failures(checks);
  }
}

TEST(Properties, SetCoverSystems) {
  for (const auto& s : setcover_suite()) {
    ASSERT_TRUE(is_d_cycle_free(s));
    auto checks = verify_main_e(s, wide_ebasis());
    auto rs = verify_rs_min(s, wide_ebasis(), wide_limits());
    checks.insert(checks.end(), rs.begin(), rs.end());
    EXPECT_TRUE(all_pass(checks)) << to_text(s) << failures(checks);
  }
}

TEST(Properties, TrOnRandomSystems) {
  for (const auto& s : random_suite()) {
    auto checks = verify_tr(s);
    EXPECT_TRUE(all_pass(checks)) << to_text(s) << failures(checks);
  }
}

TEST(Properties, HierarchyOnRandomSystems) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto s = random_system(3 + seed % 4, 1.2, seed);
    auto checks = verify_hierarchy(s);
    EXPECT_TRUE(all_pass(checks)) << to_text(s) << failures(checks);
  }
}

TEST(Properties, SetCoverSoundness) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_setcover_instance(seed);
    ASSERT_FALSE(inst.is_trivial());
    const std::size_t best = min_cover_size(inst.extended_family(), inst.q.full_set());

    const auto nb = setcover_nonbinary(inst);
    const auto k = k_c(nb.system, nb.distinguished, wide_limits());
    const auto k_cover = nb.decode(k.set);
    AttrSet u(inst.q.size());
    for (const auto& x : k_cover) u |= x;
    EXPECT_EQ(u, inst.q.full_set()) << seed;
    EXPECT_EQ(k_cover.size(), best) << seed;

    const auto bin = setcover_binary(inst);
    const auto b = b_c(bin.system, bin.w, wide_limits());
    const auto b_cover = bin.decode(b.set);
    AttrSet v(inst.q.size());
    for (const auto& x : b_cover) v |= x;
    EXPECT_EQ(v, inst.q.full_set()) << seed;
    EXPECT_EQ(b_cover.size(), best) << seed;
  }
}
