#pragma once

// Command-line driver: compute | validate | preset | search-torsion.
//
// Exit codes: 0 success, 1 input error, 2 internal consistency failure
// (d^2 != 0, homology outside [0, 2n], oracle mismatch).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric_bm/errors.hpp"
#include "toric_bm/fan.hpp"
#include "toric_bm/homology.hpp"
#include "toric_bm/presets.hpp"
#include "toric_bm/report_io.hpp"
#include "toric_bm/search.hpp"

namespace toric_bm::cli {

enum class Command { compute, validate, preset, search_torsion };

struct RunConfig {
  Command command = Command::compute;
  std::vector<std::string> source;  // a path, or "preset" followed by name and params
  std::string coefficients = "Z";
  bool json = false;
  bool dump_pages = false;
  bool check_oracles = false;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 10;
  std::string out_dir;
};

class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline FanDescription load_source(const std::vector<std::string>& source) {
  if (source.empty()) throw SourceError("cannot read fan source: none given");
  if (source.front() == "preset") return preset_fan(std::vector<std::string>(source.begin() + 1, source.end()));
  if (source.size() != 1) throw SourceError("cannot read fan source: expected one path or 'preset <name> ...'");
  std::ifstream in(source.front());
  if (!in) throw SourceError("cannot read fan source: " + source.front());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_fan_description(text.str());
}

struct OracleVerdict {
  std::string name;
  std::string status;  // "pass", "FAIL", "skipped"
  std::string detail;
};

inline std::vector<OracleVerdict> run_oracles(const Fan& fan, const HomologyReport& rep) {
  std::vector<OracleVerdict> out;
  out.push_back({"euler", oracle_euler(rep, fan) ? "pass" : "FAIL",
                 "alternating rank sum vs " + std::to_string(fan.count_cones_of_dim(fan.rank())) + " top-dimensional cones"});
  auto betti = oracle_smooth_complete_betti(fan);
  if (!betti) {
    out.push_back({"smooth_complete_betti", "skipped", "fan is not smooth and complete"});
    out.push_back({"poincare_symmetry", "skipped", "fan is not smooth and complete"});
    return out;
  }
  bool match = true;
  bool symmetric = true;
  const int top = 2 * static_cast<int>(rep.n);
  for (int j = 0; j <= top; ++j) {
    if (static_cast<long long>(rep.rank_in_degree(j)) != (*betti)[static_cast<std::size_t>(j)]) match = false;
    if (!rep.torsion_in_degree(j).empty()) match = false;
    if (rep.rank_in_degree(j) != rep.rank_in_degree(top - j)) symmetric = false;
  }
  std::string expected;
  for (auto b : *betti) expected += (expected.empty() ? "" : ",") + std::to_string(b);
  out.push_back({"smooth_complete_betti", match ? "pass" : "FAIL", "expected (" + expected + ")"});
  out.push_back({"poincare_symmetry", symmetric ? "pass" : "FAIL", ""});
  return out;
}

inline int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FanDescription desc;
  CoefficientSpec coeff;
  try {
    desc = load_source(cfg.source);
    coeff = CoefficientSpec::parse(cfg.coefficients);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  std::optional<Fan> fan;
  try {
    fan.emplace(Fan::build(desc));
  } catch (const FanError& e) {
    err << "invalid fan: " << e.what() << "\n";
    return 1;
  }
  try {
    auto kh = koszul_homology(*fan, coeff);
    auto rep = make_report(kh);
    std::vector<OracleVerdict> verdicts;
    if (cfg.check_oracles) verdicts = run_oracles(*fan, rep);
    bool failed = false;
    for (const auto& v : verdicts)
      if (v.status == "FAIL") failed = true;

    if (cfg.json) {
      ordered_json doc = report_to_json(rep);
      if (cfg.dump_pages) doc["pages"] = pages_to_json(*fan, kh, true);
      if (cfg.check_oracles) {
        doc["oracles"] = ordered_json::array();
        for (const auto& v : verdicts) doc["oracles"].push_back({{"name", v.name}, {"status", v.status}, {"detail", v.detail}});
      }
      out << doc.dump(2) << "\n";
    } else {
      out << report_to_table(rep);
      if (cfg.dump_pages) out << pages_to_table(*fan, kh);
      for (const auto& v : verdicts)
        out << "oracle " << v.name << ": " << v.status << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
    }
    if (failed) {
      err << "oracle mismatch\n";
      return 2;
    }
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FanDescription desc;
  try {
    desc = load_source(cfg.source);
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  }
  auto rep = validate_fan(desc);
  if (cfg.json)
    out << validation_to_json(rep).dump(2) << "\n";
  else
    out << validation_to_table(rep);
  return rep.ok() ? 0 : 1;
}

inline int cmd_preset(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto desc = preset_fan(cfg.source);
    (void)Fan::build(desc);
    out << to_fan_file(desc);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

inline int cmd_search_torsion(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.seed) {
    err << "search-torsion requires --seed\n";
    return 1;
  }
  FanDescription desc;
  try {
    desc = load_source(cfg.source);
    (void)Fan::build(desc);
  } catch (const std::exception& e) {
    err << "invalid seed fan: " << e.what() << "\n";
    return 1;
  }
  SearchResult result;
  try {
    result = search_torsion(desc, *cfg.seed, cfg.trials);
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const FanError& e) {
    err << "internal consistency failure: generated fan rejected: " << e.what() << "\n";
    return 2;
  }
  if (!cfg.out_dir.empty()) std::filesystem::create_directories(cfg.out_dir);
  for (const auto& f : result.findings) {
    std::ostringstream name;
    name << "trial_" << std::setw(4) << std::setfill('0') << f.trial;
    out << name.str() << ":";
    for (const auto& [q, certified] : f.primes) out << " " << q << (certified ? " (certified)" : " (conjectural)");
    out << "\n";
    for (const auto& d : f.report.degrees)
      for (const auto& p : d.pieces)
        if (!p.group.torsion.empty())
          out << "  j=" << d.j << " weight=" << p.weight << " " << group_to_string(p.group, f.report.coefficients) << "\n";
    if (!cfg.out_dir.empty()) {
      const std::filesystem::path dir(cfg.out_dir);
      std::ofstream(dir / (name.str() + ".fan")) << to_fan_file(f.fan);
      std::ofstream(dir / (name.str() + ".json")) << report_to_json(f.report).dump(2) << "\n";
    }
  }
  out << result.trial_fans.size() << " trials, " << result.findings.size() << " with torsion\n";
  return 0;
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::compute: return cmd_compute(cfg, out, err);
    case Command::validate: return cmd_validate(cfg, out, err);
    case Command::preset: return cmd_preset(cfg, out, err);
    case Command::search_torsion: return cmd_search_torsion(cfg, out, err);
  }
  return 1;
}

/// Parses argv (argv[0] is the program name) and runs the command.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel-Moore homology of toric varieties from their fans", "toric_bm"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "Compute the homology report of a fan");
  compute->add_option("source", cfg.source, "Fan file, or: preset <name> <params...>")->required();
  compute->add_option("--coeff", cfg.coefficients, "Z, Q or Fq:<q>");
  compute->add_flag("--json", cfg.json, "Emit the JSON report");
  compute->add_flag("--dump-pages", cfg.dump_pages, "Also dump Chow bases, E2 term ranks and E3 groups");
  compute->add_flag("--check-oracles", cfg.check_oracles, "Run the independent oracles");

  auto* validate = app.add_subcommand("validate", "Check a fan");
  validate->add_option("source", cfg.source, "Fan file, or: preset <name> <params...>")->required();
  validate->add_flag("--json", cfg.json, "Emit JSON");

  auto* preset = app.add_subcommand("preset", "Print a preset fan file");
  preset->add_option("name", cfg.source, "Preset name and parameters")->required();

  auto* search = app.add_subcommand("search-torsion", "Search subdivisions of a fan for torsion");
  search->add_option("source", cfg.source, "Seed fan file, or: preset <name> <params...>")->required();
  std::uint64_t seed = 0;
  auto* seed_opt = search->add_option("--seed", seed, "Random seed");
  search->add_option("--trials", cfg.trials, "Number of generated fans");
  search->add_option("--out", cfg.out_dir, "Directory for finding fan files and reports");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (seed_opt->count() > 0) cfg.seed = seed;
  if (compute->parsed()) cfg.command = Command::compute;
  if (validate->parsed()) cfg.command = Command::validate;
  if (preset->parsed()) cfg.command = Command::preset;
  if (search->parsed()) cfg.command = Command::search_torsion;
  return run(cfg, out, err);
}

}  // namespace toric_bm::cli
