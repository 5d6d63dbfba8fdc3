#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "support/common.hpp"

using namespace closys;
using closys::testing::min_cover_size;
using closys::testing::on;

TEST(Lattice, BooleanGivesEmptyBasis) {
  auto lat = boolean_lattice({"a", "b", "c"});
  EXPECT_EQ(lat.size(), 8u);
  EXPECT_EQ(lat.join_irreducibles().size(), 3u);
  auto s = standard_system_from_lattice(lat);
  EXPECT_EQ(s.universe(), 3u);
  EXPECT_TRUE(s.empty());
}

TEST(Lattice, ChainGivesBinaryChain) {
  auto s = standard_system_from_lattice(chain(4));
  EXPECT_EQ(s.ground().names(), (std::vector<std::string>{"c1", "c2", "c3"}));
  EXPECT_EQ(s, on(s, "c2 -> c1\nc3 -> c1 c2\n").normalized());
  EXPECT_THROW(chain(0), Error);
}

TEST(Lattice, DoublingBottomOfTwoChain) {
  auto d = double_element(chain(2), 0, "z");
  EXPECT_EQ(d.size(), 3u);
  auto s = standard_system_from_lattice(d);
  EXPECT_EQ(oracle::enumerate_closed(s).size(), 3u);
  EXPECT_EQ(s.universe(), 2u);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s[0].is_binary());
}

TEST(Lattice, DoublingPreservesClosedCount) {
  auto lat = boolean_lattice({"a", "b"});
  auto d = double_element(lat, 0b01, "z");
  EXPECT_EQ(d.size(), 5u);
  auto s = standard_system_from_lattice(d);
  EXPECT_EQ(oracle::enumerate_closed(s).size(), 5u);
  EXPECT_TRUE(is_standard(s));
  EXPECT_TRUE(is_d_cycle_free(s));
}

TEST(Lattice, Validation) {
  EXPECT_THROW(lattice_of(GroundSet({"a", "b"}), {0b01, 0b10, 0b11}), Error);
  EXPECT_THROW(lattice_of(GroundSet({"a", "b"}), {0, 0b01}), Error);
  EXPECT_THROW(double_element(chain(2), 0b10, "z"), Error);
}

TEST(SetCover, ParseAndFormat) {
  auto inst = b4double_instance();
  EXPECT_EQ(inst.q.size(), 4u);
  EXPECT_EQ(inst.family.size(), 5u);
  EXPECT_EQ(parse_setcover(format_setcover(inst)).family, inst.family);
  EXPECT_THROW(parse_setcover("a b c\na\nb\n"), ParseError);
  EXPECT_THROW(parse_setcover("a b\na x\n"), ParseError);
}

TEST(SetCover, Triviality) {
  EXPECT_FALSE(b4double_instance().is_trivial());
  auto trivial = parse_setcover("a b c\na b\nc\n");
  EXPECT_TRUE(trivial.is_trivial());
  EXPECT_THROW(setcover_nonbinary(trivial), PreconditionError);
}

TEST(SetCover, B4double) {
  auto r = b4double_reduction();
  const auto& g = r.system.ground();
  EXPECT_EQ(g.names(), (std::vector<std::string>{"q1", "q2", "q3", "q4", "z", "w"}));
  EXPECT_TRUE(is_d_cycle_free(r.system));
  auto w = k_c(r.system, r.distinguished);
  EXPECT_EQ(w.size, 3u);
  auto cover = r.decode(w.set);
  std::sort(cover.begin(), cover.end());
  const auto& q = r.instance.q;
  EXPECT_EQ(cover, (std::vector<AttrSet>{q.set_of({"q3"}), q.set_of({"q4"}), q.set_of({"q1", "q2"})}));
  EXPECT_EQ(saturation(canonical_basis(r.system), g.set_of({"z", "q3", "q4"})),
            g.set_of({"q1", "q2", "q3", "q4", "z"}));
}

TEST(SetCover, B4doubleBinaryMode) {
  auto r = setcover_binary(b4double_instance());
  auto w = b_c(r.system, r.w);
  EXPECT_EQ(w.size, 3u);
  EXPECT_EQ(w.size, min_cover_size(r.instance.extended_family(), r.instance.q.full_set()));
  EXPECT_THROW(r.decode(r.system.ground().singleton(r.w)), Error);
}

TEST(SetCover, RandomInstancesAreReproducible) {
  auto a = random_setcover_instance(7), b = random_setcover_instance(7);
  EXPECT_EQ(a.family, b.family);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = random_setcover_instance(seed);
    EXPECT_NO_THROW(inst.validate());
    EXPECT_LE(inst.q.size(), 6u);
    EXPECT_LE(inst.family.size(), 8u);
  }
}

TEST(Random, Deterministic) {
  EXPECT_EQ(random_system(6, 1.0, 42), random_system(6, 1.0, 42));
  EXPECT_TRUE(random_system(5, 0.0, 1).empty());
  EXPECT_EQ(attribute_label(0), "a");
  EXPECT_EQ(attribute_label(27), "b1");
}

TEST(Fixtures, AllNamedFixturesLoad) {
  auto names = fixture_names();
  EXPECT_EQ(names.size(), 9u);
  for (const auto& n : names) {
    auto s = paper_fixture(n);
    EXPECT_TRUE(is_standard(s)) << n;
  }
  EXPECT_EQ(paper_fixture("ex66"), paper_fixture("EX66"));
  EXPECT_THROW(paper_fixture("nope"), Error);
}

TEST(Fixtures, FilesMatchBuiltIns) {
  const std::vector<std::pair<const char*, const char*>> files = {
      {"2kbases.imp", "2Kbases"}, {"a12.imp", "A12"}, {"co4.imp", "Co4"},  {"cover.imp", "cover"},
      {"eo.imp", "EO"},           {"sdfails.imp", "SD+fails"}, {"ex66.imp", "ex66"}, {"e2345.imp", "2345"}};
  for (auto [file, name] : files)
    EXPECT_EQ(parse(closys::testing::read_fixture(file)), paper_fixture(name)) << file;
  EXPECT_EQ(parse_setcover(closys::testing::read_fixture("b4double.sc")).family, b4double_instance().family);
}
