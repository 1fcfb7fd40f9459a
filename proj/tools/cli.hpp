// Command implementations for the stablepath tool. Kept in a header so the
// test suite can drive them without spawning processes.
//
// Exit codes: 0 result found (or command succeeded), 1 the traversal found
// no stable vector, 2 usage or input error.

#ifndef STABLEPATH_TOOLS_CLI_HPP_
#define STABLEPATH_TOOLS_CLI_HPP_

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stablepath/stablepath.hpp"

namespace stablepath::cli {

inline constexpr int kOk = 0;
inline constexpr int kNoResult = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string algorithm;
  std::optional<ProposalVector> initial;  // only when given on the command line
  std::optional<ProposalVector> result;
  std::optional<std::int64_t> distance;
  std::optional<Matching> matching;
  std::optional<std::vector<PathEvent>> path;
  std::optional<double> wall_time_ms;
};

inline Instance load_instance(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open instance file '" + file + "'");
  try {
    return parse_instance(in);
  } catch (const ParseError& e) {
    throw UsageError(file + ":" + std::to_string(e.line()) + ": " + e.reason());
  } catch (const InstanceError& e) {
    throw UsageError(file + ": " + e.what());
  }
}

inline ProposalVector parse_vector(const Instance& inst, const std::string& text) {
  std::istringstream ss(text);
  std::vector<int> values;
  for (std::string token; ss >> token;) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size())
      throw UsageError("vector entry '" + token + "' is not an integer");
    values.push_back(v);
  }
  ProposalVector g(std::move(values));
  try {
    require_valid(inst, g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return g;
}

inline RunReport solve(const Instance& inst, const std::string& alg,
                       const std::optional<std::string>& initial_text, bool with_path) {
  RunReport report;
  report.algorithm = alg;
  if (initial_text) report.initial = parse_vector(inst, *initial_text);
  const int m = inst.men();
  std::vector<PathEvent> events;
  const auto started = std::chrono::steady_clock::now();
  if (alg == "gs") {
    if (report.initial) throw UsageError("--initial is not accepted by --alg gs");
    report.result = run_alpha(inst, ProposalVector::filled(m, 1), &events);
  } else if (alg == "alpha") {
    report.result = run_alpha(inst, report.initial.value_or(ProposalVector::filled(m, 1)), &events);
  } else if (alg == "beta") {
    report.result = run_beta(inst, report.initial.value_or(ProposalVector::filled(m, m)), &events);
  } else if (alg == "gamma") {
    if (!report.initial) throw UsageError("--alg gamma requires --initial");
    auto log = run_gamma(inst, *report.initial);
    events = std::move(log.events);
    report.result = log.final;
  } else if (alg == "delta") {
    if (!report.initial) throw UsageError("--alg delta requires --initial");
    if (with_path) throw UsageError("--path is not available for --alg delta");
    report.result = run_delta(inst, *report.initial);
  } else {
    throw UsageError("unknown algorithm '" + alg + "'");
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report.wall_time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  if (report.result) {
    if (report.initial) report.distance = dist(*report.initial, *report.result);
    report.matching = induced_matching(inst, *report.result);
    if (with_path) report.path = std::move(events);
  }
  return report;
}

inline std::string render_text(const RunReport& r) {
  std::ostringstream out;
  if (!r.result) {
    out << "result: none\n";
    return out.str();
  }
  out << "vector: " << r.result->to_string() << '\n';
  if (r.distance) out << "dist: " << *r.distance << '\n';
  if (r.matching) {
    const auto& mt = *r.matching;
    for (const auto& [i, j] : mt.pairs()) out << "match: " << i + 1 << ' ' << j + 1 << '\n';
    for (std::size_t i = 0; i < mt.wife.size(); ++i)
      if (mt.wife[i] == kNone) out << "unmatched-man: " << i + 1 << '\n';
    for (std::size_t j = 0; j < mt.husband.size(); ++j)
      if (mt.husband[j] == kNone) out << "unmatched-woman: " << j + 1 << '\n';
  }
  if (r.path) {
    for (const auto& e : *r.path) {
      out << "step: " << phase_name(e.phase) << " man=" << e.man + 1 << " from=" << e.from_choice
          << " to=" << e.to_choice << '\n';
    }
  }
  return out.str();
}

inline nlohmann::json to_json(const RunReport& r, bool with_timing) {
  using nlohmann::json;
  json out;
  out["algorithm"] = r.algorithm;
  out["initial"] = r.initial ? json(r.initial->choices()) : json(nullptr);
  out["result"] = r.result ? json(r.result->choices()) : json(nullptr);
  out["dist"] = r.distance ? json(*r.distance) : json(nullptr);
  json matches = json::array(), lone_men = json::array(), lone_women = json::array();
  if (r.matching) {
    for (const auto& [i, j] : r.matching->pairs()) matches.push_back({i + 1, j + 1});
    for (std::size_t i = 0; i < r.matching->wife.size(); ++i)
      if (r.matching->wife[i] == kNone) lone_men.push_back(i + 1);
    for (std::size_t j = 0; j < r.matching->husband.size(); ++j)
      if (r.matching->husband[j] == kNone) lone_women.push_back(j + 1);
  }
  out["matches"] = matches;
  out["unmatched_men"] = lone_men;
  out["unmatched_women"] = lone_women;
  if (r.path) {
    json steps = json::array();
    for (const auto& e : *r.path) {
      steps.push_back({{"phase", phase_name(e.phase)},
                       {"man", e.man + 1},
                       {"from", e.from_choice},
                       {"to", e.to_choice},
                       {"reason", reason_name(e.reason)}});
    }
    out["path"] = steps;
  }
  if (with_timing && r.wall_time_ms) out["wall_time_ms"] = *r.wall_time_ms;
  return out;
}

inline void write_check(const Instance& inst, const ProposalVector& g, std::ostream& out) {
  out << "stable: " << (is_stable(inst, g) ? "yes" : "no") << '\n';
  std::vector<int> proposals(inst.women(), 0);
  for (int i = 0; i < inst.men(); ++i) ++proposals[rho(inst, g, i)];
  for (int j = 0; j < inst.women(); ++j)
    if (proposals[j] > 1) out << "collision: " << j + 1 << '\n';
  for (const auto& bp : blocking_pairs(inst, g))
    out << "blocking: " << bp.man + 1 << ' ' << bp.woman + 1 << '\n';
  for (int i = 0; i < inst.men(); ++i)
    if (forbidden(inst, g, i)) out << "forbidden: " << i + 1 << '\n';
  for (int i = 0; i < inst.men(); ++i)
    if (r_forbidden(inst, g, i)) out << "rforbidden: " << i + 1 << '\n';
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable matchings from arbitrary initial proposal vectors"};
  app.require_subcommand(1);

  std::string alg, instance_file, initial, vector_text, out_file;
  bool with_path = false, unit_steps = false, as_json = false, with_timing = false;
  int men = 0, women = 0;
  std::uint64_t seed = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Run one traversal algorithm");
  solve_cmd->add_option("--alg", alg, "gs, alpha, beta, gamma or delta")
      ->required()
      ->check(CLI::IsMember({"gs", "alpha", "beta", "gamma", "delta"}));
  solve_cmd->add_option("--instance", instance_file, "Instance file")->required();
  auto* initial_opt = solve_cmd->add_option("--initial", initial, "Initial vector, e.g. \"2 2 2\"");
  solve_cmd->add_flag("--path", with_path, "Print the sequence of moves");
  solve_cmd->add_flag("--unit-steps", unit_steps, "Split downward jumps into unit steps");
  solve_cmd->add_flag("--json", as_json, "Emit one JSON object");
  solve_cmd->add_flag("--timing", with_timing, "Include wall time in JSON output");

  auto* enum_cmd = app.add_subcommand("enumerate", "List every stable vector (exhaustive)");
  enum_cmd->add_option("--instance", instance_file, "Instance file")->required();

  auto* check_cmd = app.add_subcommand("check", "Report stability diagnostics for a vector");
  check_cmd->add_option("--instance", instance_file, "Instance file")->required();
  check_cmd->add_option("--vector", vector_text, "Proposal vector")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random complete instance");
  gen_cmd->add_option("--men", men, "Number of men")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--women", women, "Number of women")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Random seed")->required();
  gen_cmd->add_option("--out", out_file, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const auto inst = load_instance(instance_file);
      std::optional<std::string> given;
      if (initial_opt->count() > 0) given = initial;
      auto report = solve(inst, alg, given, with_path || unit_steps);
      if (unit_steps && report.path) report.path = expand_unit_steps(*report.path);
      if (as_json) {
        out << to_json(report, with_timing).dump() << '\n';
      } else {
        out << render_text(report);
      }
      return report.result ? kOk : kNoResult;
    }
    if (enum_cmd->parsed()) {
      const auto inst = load_instance(instance_file);
      if (inst.men() > oracle::kRecommendedMaxMen) {
        err << "warning: exhaustive enumeration over " << inst.men()
            << " men may take a long time\n";
      }
      const auto all = oracle::enumerate_stable(inst);
      for (const auto& g : all) out << "vector: " << g.to_string() << '\n';
      out << "count: " << all.size() << '\n';
      return kOk;
    }
    if (check_cmd->parsed()) {
      const auto inst = load_instance(instance_file);
      write_check(inst, parse_vector(inst, vector_text), out);
      return kOk;
    }
    if (gen_cmd->parsed()) {
      if (men > women) throw UsageError("--men must not exceed --women");
      const auto text = serialize_instance(generate_instance(men, women, seed));
      if (out_file.empty()) {
        out << text;
      } else {
        std::ofstream file(out_file);
        if (!(file << text)) throw UsageError("cannot write '" + out_file + "'");
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace stablepath::cli

#endif  // STABLEPATH_TOOLS_CLI_HPP_
