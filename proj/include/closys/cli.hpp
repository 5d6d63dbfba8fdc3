#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "closys/canonical.hpp"
#include "closys/drelation.hpp"
#include "closys/ebasis.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/instances.hpp"
#include "closys/io.hpp"
#include "closys/kbasis.hpp"
#include "closys/optsearch.hpp"
#include "closys/oracle.hpp"
#include "closys/relation.hpp"
#include "closys/report.hpp"
#include "closys/standard.hpp"
#include "closys/verify.hpp"

namespace closys::cli {

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBound = 3 };

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Output {
  std::string name;
  ImplicationSet basis;
};

/// Everything a command prints. Text and JSON renderings carry the same
/// fields.
struct Report {
  std::string command;
  std::string digest;  // empty when there is no input file
  std::vector<Output> outputs;
  std::vector<CheckResult> checks;
  nlohmann::json data = nlohmann::json::object();
};

inline nlohmann::json metrics_json(const ImplicationSet& b) {
  const auto m = metrics(b);
  auto part = [](const SizeMetrics::Part& p) {
    return nlohmann::json{{"count", p.count}, {"s", p.s}, {"sL", p.sL}, {"sR", p.sR}};
  };
  auto j = part(m.total);
  j["binary"] = part(m.binary);
  j["nonbinary"] = part(m.nonbinary);
  return j;
}

inline std::string metrics_text(const ImplicationSet& b) {
  const auto m = metrics(b);
  auto part = [](const SizeMetrics::Part& p) {
    return "count=" + std::to_string(p.count) + " s=" + std::to_string(p.s) + " sL=" + std::to_string(p.sL) +
           " sR=" + std::to_string(p.sR);
  };
  return part(m.total) + " | binary " + part(m.binary) + " | non-binary " + part(m.nonbinary);
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  if (!r.digest.empty()) j["input_digest"] = "fnv1a64:" + r.digest;
  j["outputs"] = nlohmann::json::array();
  for (const auto& o : r.outputs)
    j["outputs"].push_back({{"name", o.name}, {"basis", closys::to_json(o.basis)}, {"metrics", metrics_json(o.basis)}});
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"details", c.details}, {"informational", c.informational}});
  if (!r.data.empty()) j["data"] = r.data;
  return j;
}

namespace detail {

inline std::string text_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += " ";
      out += text_value(e);
    }
    return out;
  }
  return v.dump();
}

}  // namespace detail

/// Line-oriented rendering. Everything but the bases is a comment, so a
/// single-basis report parses back as that basis.
inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "# command: " << r.command << "\n";
  if (!r.digest.empty()) out << "# input: fnv1a64:" << r.digest << "\n";
  for (const auto& o : r.outputs) {
    out << "# " << o.name << ": " << metrics_text(o.basis) << "\n";
    out << closys::to_text(o.basis);
  }
  for (const auto& [key, value] : r.data.items()) {
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      out << "# " << key << ":\n";
      for (const auto& row : value) out << "#   " << detail::text_value(row) << "\n";
    } else {
      out << "# " << key << ": " << detail::text_value(value) << "\n";
    }
  }
  for (const auto& c : r.checks) {
    out << "# " << (c.informational ? "INFO " : "") << (c.pass ? "PASS" : "FAIL") << " " << c.name;
    if (!c.details.empty()) out << ": " << c.details;
    out << "\n";
  }
  return out.str();
}

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> oracle_bound;
  std::string tiebreak = "first";

  oracle::OracleConfig oracle() const {
    oracle::OracleConfig cfg;
    if (oracle_bound) cfg.bound = *oracle_bound;
    return cfg;
  }
  /// --oracle-bound also lifts the attribute cap of the exhaustive searches.
  SearchLimits limits() const {
    SearchLimits l;
    if (oracle_bound) l.max_attributes = *oracle_bound;
    return l;
  }
  EBasisOptions ebasis() const { return {oracle(), true}; }
};

inline std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json pairs_json(const PairRelation& rel) {
  auto j = nlohmann::json::array();
  for (auto [a, b] : rel.pairs()) j.push_back({rel.ground().name(a), rel.ground().name(b)});
  return j;
}

inline nlohmann::json sets_json(const GroundSet& g, const std::vector<AttrSet>& sets) {
  auto j = nlohmann::json::array();
  for (const auto& s : sets) {
    auto names = nlohmann::json::array();
    for (const auto& n : g.names_of(s)) names.push_back(n);
    if (names.empty()) names.push_back("{}");
    j.push_back(names);
  }
  return j;
}

/// Runs one command line (without the program name). Never throws.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"closys: implicational bases of finite closure systems"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit a JSON report");
  app.add_option("--seed", opt.seed, "seed for random generators");
  app.add_option("--oracle-bound", opt.oracle_bound, "largest ground set for brute-force checks and searches");
  app.add_option("--tiebreak", opt.tiebreak, "minimal order generator choice")->check(CLI::IsMember({"first", "last"}));

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "implication file, '-' for stdin")->required(); };

  auto* canonical = app.add_subcommand("canonical", "canonical basis");
  add_file(canonical);
  auto* regularize_cmd = app.add_subcommand("regularize", "regular equivalent basis");
  add_file(regularize_cmd);
  auto* metrics_cmd = app.add_subcommand("metrics", "size parameters of the input basis");
  add_file(metrics_cmd);

  bool all = false;
  auto* kbasis = app.add_subcommand("kbasis", "K-basis");
  add_file(kbasis);
  kbasis->add_flag("--all", all, "every K-basis");

  bool aggregated = false, optimized = false, fmode = false, foe = false, ordered = false, force = false;
  auto* ebasis = app.add_subcommand("ebasis", "E-basis and its variants");
  add_file(ebasis);
  auto* variants = ebasis->add_option_group("variant")->require_option(0, 1);
  variants->add_flag("--aggregated", aggregated, "aggregated E-basis");
  variants->add_flag("--optimized", optimized, "optimized E-basis");
  variants->add_flag("--f", fmode, "F-basis");
  variants->add_flag("--foe", foe, "F binary part with optimized E non-binary part");
  variants->add_flag("--ordered", ordered, "optimized E-basis as an ordered sequence");
  ebasis->add_flag("--force", force, "F-basis without the join-semidistributivity check");

  bool hierarchy = false;
  auto* optimum = app.add_subcommand("optimum", "optimum bases by exhaustive search");
  add_file(optimum);
  optimum->add_flag("--all", all, "every optimum basis");
  optimum->add_flag("--report-hierarchy", hierarchy, "compare with the other bases");

  std::string what;
  auto* check_cmd = app.add_subcommand("check", "decide a property");
  check_cmd->add_option("property", what)->required()->check(CLI::IsMember({"standard", "uc", "d-cycle-free", "sd-join"}));
  add_file(check_cmd);

  bool input_basis = false;
  auto* relation = app.add_subcommand("relation", "delta relation or the D-relation");
  relation->add_option("which", what)->required()->check(CLI::IsMember({"delta", "d"}));
  add_file(relation);
  relation->add_flag("--input-basis", input_basis, "delta of the input basis instead of the refined canonical one");

  std::vector<std::string> cover_of;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force views");
  oracle_cmd->add_option("view", what)->required()->check(CLI::IsMember({"closed", "critical", "covers"}));
  add_file(oracle_cmd);
  oracle_cmd->add_option("--attr", cover_of, "attributes whose minimal covers to list (default all)");

  auto* verify = app.add_subcommand("verify", "cross-module checks");
  verify->add_option("property", what)->required()->check(CLI::IsMember({"tr", "mainE", "rs-min", "hierarchy"}));
  add_file(verify);

  auto* gen = app.add_subcommand("gen", "generate systems");
  gen->require_subcommand(1);
  std::string fixture_name, mode = "nb", infile, omit;
  std::size_t n = 5;
  double density = 1.0;
  auto* gen_fixture = gen->add_subcommand("fixture", "named example system");
  gen_fixture->add_option("name", fixture_name)->required();
  auto* gen_setcover = gen->add_subcommand("setcover", "system from a set cover instance");
  gen_setcover->add_option("--mode", mode)->check(CLI::IsMember({"nb", "b"}));
  gen_setcover->add_option("--infile", infile)->required();
  gen_setcover->add_option("--omit", omit, "element left out of t (nb mode; default the first)");
  auto* gen_random = gen->add_subcommand("random", "random standard system");
  gen_random->add_option("-n", n, "number of attributes");
  gen_random->add_option("-d", density, "implications per attribute");

  std::vector<std::string> argv_store{"closys"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Report report;
  for (const auto& a : args) report.command += (report.command.empty() ? "" : " ") + a;

  try {
    const Tiebreak tb = parse_tiebreak(opt.tiebreak);
    auto load = [&]() {
      const std::string text = read_file(file);
      report.digest = fnv1a64(text);
      return parse(text);
    };

    if (canonical->parsed()) {
      report.outputs.push_back({"canonical", canonical_basis(load())});
    } else if (regularize_cmd->parsed()) {
      report.outputs.push_back({"regularized", regularize(load())});
    } else if (metrics_cmd->parsed()) {
      report.outputs.push_back({"input", load()});
    } else if (kbasis->parsed()) {
      const auto sigma = load();
      if (all) {
        std::size_t i = 0;
        for (auto& b : all_k_bases(sigma)) report.outputs.push_back({"k-basis " + std::to_string(++i), b});
      } else {
        report.outputs.push_back({"k-basis", k_basis(sigma, tb)});
      }
    } else if (ebasis->parsed()) {
      const auto sigma = load();
      if (aggregated)
        report.outputs.push_back({"aggregated e-basis", aggregated_e_basis(sigma, opt.ebasis())});
      else if (optimized)
        report.outputs.push_back({"optimized e-basis", optimized_e_basis(sigma, opt.ebasis())});
      else if (fmode)
        report.outputs.push_back({"f-basis", f_basis(sigma, {force, opt.oracle()})});
      else if (foe)
        report.outputs.push_back({"foe-basis", foe_basis(sigma, opt.ebasis())});
      else if (ordered)
        report.outputs.push_back({"ordered e-sequence", ordered_e_sequence(sigma, opt.ebasis())});
      else
        report.outputs.push_back({"e-basis", e_basis(sigma, opt.ebasis())});
    } else if (optimum->parsed()) {
      const auto sigma = load();
      const auto search = optimum_search(sigma, opt.limits());
      report.data["optimum_bases"] = search.bases.size();
      report.data["min_sL"] = search.min_left_size();
      report.data["min_sR"] = search.min_right_size();
      report.data["min_sR_nonbinary"] = search.min_nonbinary_right_size();
      std::size_t i = 0;
      for (const auto& b : search.bases) {
        report.outputs.push_back({"optimum " + std::to_string(++i), b});
        if (!all) break;
      }
      if (hierarchy) report.checks = verify_hierarchy(sigma, opt.limits(), opt.ebasis());
    } else if (check_cmd->parsed()) {
      const auto sigma = load();
      if (what == "standard") {
        const auto r = check_standard(sigma);
        std::string details;
        if (!r.empty_closed) details = "the empty set is not closed";
        for (std::size_t v : r.violations)
          details += (details.empty() ? "" : "; ") + std::string("phi(") + sigma.ground().name(v) + ") minus " +
                     sigma.ground().name(v) + " is not closed";
        report.checks.push_back(check("standard", r.standard, details));
      } else if (what == "uc") {
        report.checks.push_back(check("uc", is_uc_system(sigma)));
      } else if (what == "d-cycle-free") {
        require_standard(sigma);
        const auto cycle = d_cycle(sigma, tb);
        report.checks.push_back(
            check("d-cycle-free", !cycle, cycle ? "D-cycle: " + format_cycle(sigma.ground(), *cycle) : ""));
      } else {
        const auto lattice = oracle::enumerate_closed(sigma, opt.oracle());
        report.data["closed_sets"] = lattice.size();
        report.checks.push_back(check("sd-join", oracle::is_join_semidistributive(lattice)));
      }
    } else if (relation->parsed()) {
      const auto sigma = load();
      if (what == "delta") {
        report.data["delta"] = pairs_json(input_basis ? delta(sigma) : delta(sigma_star(sigma, tb)));
      } else {
        report.data["d"] = pairs_json(oracle::d_relation(sigma, opt.oracle()));
      }
    } else if (oracle_cmd->parsed()) {
      const auto sigma = load();
      const oracle::Oracle o(sigma, opt.oracle());
      const auto& g = sigma.ground();
      const std::size_t u = sigma.universe();
      if (what == "closed") {
        std::vector<AttrSet> sets;
        for (auto m : o.closed_masks()) sets.push_back(oracle::set_of(u, m));
        report.data["closed"] = sets_json(g, sets);
      } else if (what == "critical") {
        std::vector<AttrSet> sets;
        for (auto m : o.critical_masks()) sets.push_back(oracle::set_of(u, m));
        report.data["critical"] = sets_json(g, sets);
        report.outputs.push_back({"canonical (oracle)", o.canonical_basis()});
      } else {
        std::vector<std::size_t> targets;
        if (cover_of.empty())
          for (std::size_t x = 0; x < u; ++x) targets.push_back(x);
        for (const auto& name : cover_of) targets.push_back(g.index(name));
        for (std::size_t x : targets) {
          std::vector<AttrSet> sets;
          for (auto m : o.minimal_covers(x)) sets.push_back(oracle::set_of(u, m));
          report.data["covers of " + g.name(x)] = sets_json(g, sets);
        }
      }
    } else if (verify->parsed()) {
      const auto sigma = load();
      if (what == "tr")
        report.checks = verify_tr(sigma, opt.oracle());
      else if (what == "mainE")
        report.checks = verify_main_e(sigma, opt.ebasis());
      else if (what == "rs-min")
        report.checks = verify_rs_min(sigma, opt.ebasis(), opt.limits());
      else
        report.checks = verify_hierarchy(sigma, opt.limits(), opt.ebasis());
    } else if (gen_fixture->parsed()) {
      report.outputs.push_back({fixture_name, paper_fixture(fixture_name)});
    } else if (gen_setcover->parsed()) {
      file = infile;
      const std::string text = read_file(infile);
      report.digest = fnv1a64(text);
      const auto inst = parse_setcover(text);
      std::size_t omit_index = 0;
      if (!omit.empty()) omit_index = inst.q.index(omit);
      const auto r = mode == "nb" ? setcover_nonbinary(inst, omit_index) : setcover_binary(inst);
      report.outputs.push_back({"setcover " + mode, r.system});
      report.data["distinguished"] = r.system.ground().names_of(r.distinguished);
      auto reading = nlohmann::json::array();
      for (std::size_t i = 0; i < r.meaning.size(); ++i)
        if (i != r.w)
          reading.push_back({r.system.ground().name(i), "=", "{" + inst.q.format(r.meaning[i], ",") + "}"});
      report.data["reading"] = reading;
    } else if (gen_random->parsed()) {
      report.outputs.push_back({"random", random_system(n, density, opt.seed)});
    }
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DCycleError& e) {
    report.checks.push_back(check("d-cycle-free", false, e.what()));
    out << (opt.json ? to_json(report).dump(2) + "\n" : to_text(report));
    err << e.what() << "\n";
    return kCheckFailed;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  out << (opt.json ? to_json(report).dump(2) + "\n" : to_text(report));
  if (!all_pass(report.checks)) {
    for (const auto& c : report.checks)
      if (!c.pass && !c.informational) err << c.name << (c.details.empty() ? "" : ": " + c.details) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace closys::cli
