#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "closys/cli.hpp"
#include "support/common.hpp"

using closys::testing::fixture_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = closys::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  auto r = cli(std::move(args));
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, KBasisText) {
  auto r = cli({"kbasis", fixture_path("2kbases.imp")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" s=17 "), std::string::npos) << r.out;
  auto back = closys::parse(r.out);
  EXPECT_TRUE(closys::equivalent(back, closys::paper_fixture("2Kbases")));
}

TEST(Cli, KBasisAllJson) {
  auto j = cli_json({"kbasis", "--all", fixture_path("2kbases.imp")});
  EXPECT_EQ(j["command"], "--json kbasis --all " + fixture_path("2kbases.imp"));
  ASSERT_EQ(j["outputs"].size(), 2u);
  EXPECT_EQ(j["outputs"][0]["metrics"]["s"], 17);
  EXPECT_EQ(j["input_digest"].get<std::string>().size(), 24u);
}

TEST(Cli, JsonOutputParsesBack) {
  auto r = cli({"--json", "canonical", fixture_path("a12.imp")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(closys::parse(r.out), closys::canonical_basis(closys::paper_fixture("A12")));
}

TEST(Cli, DCycleCheckFails) {
  auto r = cli({"check", "d-cycle-free", fixture_path("co4.imp")});
  EXPECT_EQ(r.code, closys::cli::kCheckFailed);
  EXPECT_NE(r.out.find("b→c→b"), std::string::npos) << r.out;
  auto e = cli({"ebasis", fixture_path("co4.imp")});
  EXPECT_EQ(e.code, closys::cli::kCheckFailed);
}

TEST(Cli, ChecksPass) {
  EXPECT_EQ(cli({"check", "standard", fixture_path("a12.imp")}).code, 0);
  EXPECT_EQ(cli({"check", "uc", fixture_path("2kbases.imp")}).code, 0);
  EXPECT_EQ(cli({"check", "uc", fixture_path("ex66.imp")}).code, 1);
  EXPECT_EQ(cli({"check", "sd-join", fixture_path("sdfails.imp")}).code, 1);
  EXPECT_EQ(cli({"check", "sd-join", fixture_path("co4.imp")}).code, 0);
}

TEST(Cli, NonStandardInputIsReported) {
  auto path = std::filesystem::temp_directory_path() / "closys_twins.imp";
  std::ofstream(path) << "a -> b\nb -> a\n";
  auto r = cli({"check", "standard", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("phi(a) minus a is not closed"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(Cli, OptimumWithHierarchy) {
  auto r = cli({"optimum", "--all", "--report-hierarchy", fixture_path("ex66.imp")});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = cli_json({"optimum", "--all", fixture_path("ex66.imp")});
  EXPECT_EQ(j["data"]["optimum_bases"], 2);
  EXPECT_EQ(j["outputs"].size(), 2u);
}

TEST(Cli, Relations) {
  auto j = cli_json({"relation", "delta", fixture_path("a12.imp")});
  EXPECT_TRUE(j["data"]["delta"].is_array());
  EXPECT_FALSE(j["data"]["delta"].empty());
  auto bad = cli({"relation", "delta", "--input-basis", fixture_path("regularize.imp")});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, EBasisVariants) {
  for (const char* v : {"--aggregated", "--optimized", "--f", "--foe", "--ordered"})
    EXPECT_EQ(cli({"ebasis", v, fixture_path("eo.imp")}).code, 0) << v;
  EXPECT_EQ(cli({"ebasis", "--f", "--foe", fixture_path("eo.imp")}).code, closys::cli::kUsage);
  EXPECT_EQ(cli({"ebasis", "--f", fixture_path("sdfails.imp")}).code, 1);
  EXPECT_EQ(cli({"ebasis", "--f", "--force", fixture_path("sdfails.imp")}).code, 0);
}

TEST(Cli, Verify) {
  for (const char* p : {"tr", "mainE", "rs-min", "hierarchy"})
    EXPECT_EQ(cli({"verify", p, fixture_path("e2345.imp")}).code, 0) << p;
}

TEST(Cli, Oracle) {
  auto j = cli_json({"oracle", "covers", fixture_path("cover.imp"), "--attr", "a"});
  ASSERT_TRUE(j["data"].contains("covers of a"));
  EXPECT_EQ(j["data"]["covers of a"].size(), 1u);
  auto c = cli_json({"oracle", "closed", fixture_path("sdfails.imp")});
  EXPECT_FALSE(c["data"]["closed"].empty());
}

TEST(Cli, Generators) {
  auto f = cli({"gen", "fixture", "B4double"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(closys::parse(f.out), closys::b4double_reduction().system);
  auto sc = cli({"gen", "setcover", "--infile", fixture_path("b4double.sc"), "--omit", "q4"});
  EXPECT_EQ(sc.code, 0) << sc.err;
  EXPECT_EQ(closys::parse(sc.out), closys::b4double_reduction().system);
  auto b = cli({"gen", "setcover", "--mode", "b", "--infile", fixture_path("b4double.sc")});
  EXPECT_EQ(b.code, 0);
  auto r1 = cli({"--seed", "9", "gen", "random", "-n", "6"});
  auto r2 = cli({"--seed", "9", "gen", "random", "-n", "6"});
  EXPECT_EQ(r1.out, r2.out);
}

TEST(Cli, ErrorsAndBounds) {
  EXPECT_EQ(cli({}).code, closys::cli::kUsage);
  EXPECT_EQ(cli({"canonical", "/nonexistent/file"}).code, closys::cli::kUsage);
  EXPECT_EQ(cli({"gen", "fixture", "nope"}).code, closys::cli::kUsage);
  EXPECT_EQ(cli({"--oracle-bound", "3", "oracle", "closed", fixture_path("a12.imp")}).code, closys::cli::kBound);
  EXPECT_EQ(cli({"--oracle-bound", "5", "optimum", fixture_path("a12.imp")}).code, closys::cli::kBound);
}

TEST(Cli, MetricsOfEmptySystem) {
  auto j = cli_json({"metrics", fixture_path("empty.imp")});
  EXPECT_EQ(j["outputs"][0]["metrics"]["s"], 0);
  EXPECT_EQ(j["outputs"][0]["metrics"]["count"], 0);
}
