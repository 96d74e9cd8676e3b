// Copyright 2026 The ecse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ecse/generators.hpp"
#include "ecse/io.hpp"
#include "ecse/ip.hpp"
#include "ecse/reduce.hpp"
#include "ecse/scoring.hpp"
#include "ecse/solve.hpp"

namespace ecse::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string input;
  std::string solution;
  std::vector<std::string> inputs;
  std::string out;
  std::string algo = "auto";
  std::string algos = "auto";
  std::string from;
  std::string mode = "gcse";
  bool json = false;
  bool exit_verdict = false;
  std::uint64_t seed = 1;
  std::int64_t max_nodes = 0;
  int random_count = 0;
  int n = 6, m = 4, tau = 3, k = 2, x = 2, y = 1;
  double empty_prob = 0.2;
};

Mode ParseMode(const std::string& name) {
  if (name == "gcse" || name == "egalitarian") return Mode::kEgalitarian;
  if (name == "qcse" || name == "equitable") return Mode::kEquitable;
  throw PreconditionError("unknown mode '" + name + "'");
}

Algorithm ParseAlgo(const std::string& name) {
  std::optional<Algorithm> algo = ParseAlgorithm(name);
  if (!algo) throw PreconditionError("unknown algorithm '" + name + "'");
  return *algo;
}

Json CommitteesJson(const CommitteeSequence& seq) {
  Json list = Json::array();
  for (const Committee& committee : seq.committees) list.push_back(committee);
  return list;
}

Json StatsJson(const SolveResult& result) {
  Json stats = Json::object();
  for (const auto& [key, value] : result.stats) stats[key] = value;
  return stats;
}

void Emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    WriteFile(cfg.out, text);
  }
}

int CmdSolve(const Config& cfg, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(cfg.input));
  SolveOptions options;
  options.algorithm = ParseAlgo(cfg.algo);
  options.max_nodes = cfg.max_nodes;
  if (options.algorithm == Algorithm::kTau2 &&
      (inst.mode != Mode::kEquitable || inst.tau != 2)) {
    throw PreconditionError("tau2 needs an equitable instance with tau = 2");
  }
  const SolveResult result = Solve(inst, options);
  if (cfg.json) {
    Json doc;
    doc["verdict"] = result.yes() ? "yes" : "no";
    doc["committees"] =
        result.witness ? CommitteesJson(*result.witness) : Json(nullptr);
    doc["solver"] = result.solver;
    doc["stats"] = StatsJson(result);
    Emit(cfg, out, doc.dump(2) + "\n");
  } else {
    out << (result.yes() ? "YES" : "NO") << "\n";
    if (result.witness) Emit(cfg, out, SerializeSolution(*result.witness));
  }
  if (cfg.exit_verdict) return result.yes() ? 0 : 1;
  return kExitOk;
}

int CmdVerify(const Config& cfg, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(cfg.input));
  const CommitteeSequence seq = ParseSolution(ReadFile(cfg.solution));
  const VerificationReport report = Verify(inst, seq);
  if (cfg.json) {
    Json doc;
    doc["feasible"] = report.feasible;
    doc["level_scores"] = report.level_scores;
    doc["agent_scores"] = report.agent_scores;
    if (report.first_violation) {
      const Violation& v = *report.first_violation;
      doc["first_violation"] = {{"kind", ViolationKindName(v.kind)},
                                {"index", v.index + 1},
                                {"value", v.value},
                                {"bound", v.bound}};
    } else {
      doc["first_violation"] = nullptr;
    }
    out << doc.dump(2) << "\n";
  } else if (report.feasible) {
    out << "FEASIBLE\n";
  } else {
    out << "INFEASIBLE " << report.first_violation->Describe() << "\n";
  }
  if (cfg.exit_verdict) return report.feasible ? 0 : 1;
  return kExitOk;
}

std::vector<int> OneBased(const std::vector<int>& levels) {
  std::vector<int> shifted = levels;
  for (int& t : shifted) ++t;
  return shifted;
}

int CmdKernelize(const Config& cfg, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(cfg.input));
  const KernelResult kernel = KernelizeNy(inst);
  if (cfg.json) {
    Json doc;
    doc["resolved"] = kernel.resolved;
    if (kernel.resolved) {
      doc["verdict"] = kernel.verdict == Verdict::kYes ? "yes" : "no";
      doc["committees"] =
          kernel.witness ? CommitteesJson(*kernel.witness) : Json(nullptr);
    } else {
      doc["tau"] = kernel.reduced.tau;
      doc["m"] = kernel.reduced.m;
      doc["surviving_levels"] = OneBased(kernel.surviving_levels);
      doc["deleted_levels"] = OneBased(kernel.deleted_levels);
      doc["instance"] = SerializeInstance(kernel.reduced);
    }
    Json rules = Json::array();
    for (const RuleRecord& record : kernel.rule_log) {
      rules.push_back({{"rule", record.rule},
                       {"level", record.level < 0 ? Json(nullptr)
                                                  : Json(record.level + 1)}});
    }
    doc["rules"] = rules;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  if (kernel.resolved) {
    const bool yes = kernel.verdict == Verdict::kYes;
    out << "RESOLVED " << (yes ? "YES" : "NO") << "\n";
    if (kernel.witness) Emit(cfg, out, SerializeSolution(*kernel.witness));
    return kExitOk;
  }
  out << "REDUCED tau=" << kernel.reduced.tau << " m=" << kernel.reduced.m
      << " deleted=" << kernel.deleted_levels.size() << "\n";
  Emit(cfg, out, SerializeInstance(kernel.reduced));
  return kExitOk;
}

std::string RequireInput(const Config& cfg) {
  if (cfg.inputs.empty()) {
    throw PreconditionError("generate --from " + cfg.from +
                            " needs an input file");
  }
  return ReadFile(cfg.inputs.front());
}

int CmdGenerate(const Config& cfg, std::ostream& out) {
  Instance inst;
  const std::string& from = cfg.from;
  if (from == "random") {
    inst = RandomInstance(cfg.seed, cfg.n, cfg.m, cfg.tau, cfg.k, cfg.x, cfg.y,
                          ParseMode(cfg.mode), cfg.empty_prob);
  } else if (from == "sat") {
    inst = GenGcseSat(ParseDimacs(RequireInput(cfg)));
  } else if (from == "3sat") {
    inst = GenGcse3Sat(ParseDimacs(RequireInput(cfg)));
  } else if (from == "x13sat") {
    inst = GenQcseX13Sat(ParseDimacs(RequireInput(cfg)));
  } else if (from == "monotone-x13sat") {
    inst = GenQcseMonotoneX13Sat(ParseDimacs(RequireInput(cfg)));
  } else if (from == "nmx") {
    inst = GenNmx(ParseDimacs(RequireInput(cfg)), ParseMode(cfg.mode));
  } else if (from == "cbvc") {
    const CbvcInput input = ParseCbvc(RequireInput(cfg));
    inst = GenFromCbvc(input.graph, input.k);
  } else if (from == "3part") {
    inst = Gen3Part(ParseMultiset(RequireInput(cfg)), ParseMode(cfg.mode));
  } else if (from == "or") {
    std::vector<Instance> parts;
    for (const std::string& path : cfg.inputs) {
      parts.push_back(ParseInstance(ReadFile(path)));
    }
    inst = OrCompose(parts);
  } else {
    throw PreconditionError("unknown generator '" + from + "'");
  }
  Emit(cfg, out, SerializeInstance(inst));
  return kExitOk;
}

int CmdExportIp(const Config& cfg, std::ostream& out) {
  const Instance inst = ParseInstance(ReadFile(cfg.input));
  Emit(cfg, out, ExportLp(BuildIp(inst)));
  return kExitOk;
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::int64_t StatOr(const SolveResult& result,
                    std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    auto it = result.stats.find(key);
    if (it != result.stats.end()) return it->second;
  }
  return 0;
}

int CmdBench(const Config& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, Instance>> instances;
  for (const std::string& path : cfg.inputs) {
    if (fs::is_directory(path)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ecse") {
          files.push_back(entry.path().string());
        }
      }
      std::sort(files.begin(), files.end());
      for (const std::string& file : files) {
        instances.emplace_back(file, ParseInstance(ReadFile(file)));
      }
    } else {
      instances.emplace_back(path, ParseInstance(ReadFile(path)));
    }
  }
  for (int i = 0; i < cfg.random_count; ++i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    instances.emplace_back(
        "random-" + std::to_string(seed),
        RandomInstance(seed, cfg.n, cfg.m, cfg.tau, cfg.k, cfg.x, cfg.y,
                       ParseMode(cfg.mode), cfg.empty_prob));
  }
  std::vector<Algorithm> algos;
  for (const std::string& name : SplitCommas(cfg.algos)) {
    algos.push_back(ParseAlgo(name));
  }

  struct Row {
    std::string instance;
    std::string algo;
    std::string verdict;
    std::int64_t micros = 0;
    std::int64_t branches = 0;
    std::int64_t table_entries = 0;
    std::int64_t committees = 0;
  };
  std::vector<Row> rows;
  for (const auto& [name, inst] : instances) {
    for (Algorithm algo : algos) {
      Row row;
      row.instance = name;
      row.algo = AlgorithmName(algo);
      SolveOptions options;
      options.algorithm = algo;
      options.max_nodes = cfg.max_nodes;
      const auto start = std::chrono::steady_clock::now();
      try {
        const SolveResult result = Solve(inst, options);
        row.verdict = result.yes() ? "yes" : "no";
        row.branches =
            StatOr(result, {"branches", "nodes_expanded", "ip_nodes"});
        row.table_entries = StatOr(result, {"table_entries", "states"});
        row.committees = StatOr(result, {"committees_enumerated"});
      } catch (const LimitError&) {
        row.verdict = "undecided";
      } catch (const PreconditionError&) {
        row.verdict = "n/a";
      }
      row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.instance, a.algo) < std::tie(b.instance, b.algo);
  });
  std::ostringstream csv;
  csv << "instance,algo,verdict,micros,branches,table_entries,"
         "committees_enumerated\n";
  for (const Row& row : rows) {
    csv << row.instance << "," << row.algo << "," << row.verdict << ","
        << row.micros << "," << row.branches << "," << row.table_entries << ","
        << row.committees << "\n";
  }
  Emit(cfg, out, csv.str());
  return kExitOk;
}

void AddRandomOptions(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--n", cfg.n, "Agents");
  cmd->add_option("--m", cfg.m, "Candidates");
  cmd->add_option("--tau", cfg.tau, "Levels");
  cmd->add_option("--k", cfg.k, "Committee size bound");
  cmd->add_option("--x", cfg.x, "Level score threshold");
  cmd->add_option("--y", cfg.y, "Agent score target");
  cmd->add_option("--empty-prob", cfg.empty_prob,
                  "Probability of an empty nomination");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Config cfg;
  CLI::App app{
      "Exact solvers for egalitarian and equitable committee "
      "sequence election",
      "ecse"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "Decide an instance");
  solve->add_option("instance", cfg.input, "Instance file")->required();
  solve->add_option("--algo", cfg.algo, "auto, brute, branch, dp, tau2 or ip");
  solve->add_option("--max-nodes", cfg.max_nodes, "Search node budget");
  solve->add_option("--out", cfg.out, "Write the witness or JSON here");
  solve->add_flag("--json", cfg.json, "JSON output");
  solve->add_flag("--exit-verdict", cfg.exit_verdict,
                  "Exit 0 on yes and 1 on no");

  CLI::App* verify = app.add_subcommand("verify", "Check a solution");
  verify->add_option("instance", cfg.input, "Instance file")->required();
  verify->add_option("solution", cfg.solution, "Solution file")->required();
  verify->add_flag("--json", cfg.json, "JSON output");
  verify->add_flag("--exit-verdict", cfg.exit_verdict,
                   "Exit 0 when feasible and 1 otherwise");

  CLI::App* kernelize =
      app.add_subcommand("kernelize", "Reduce an egalitarian instance");
  kernelize->add_option("instance", cfg.input, "Instance file")->required();
  kernelize->add_option("--out", cfg.out, "Write the reduced instance here");
  kernelize->add_flag("--json", cfg.json, "JSON output");

  CLI::App* generate =
      app.add_subcommand("generate", "Build an instance from a source problem");
  generate
      ->add_option("--from", cfg.from,
                   "sat, 3sat, x13sat, monotone-x13sat, nmx, cbvc, 3part, or, "
                   "random")
      ->required();
  generate->add_option("inputs", cfg.inputs, "Source files");
  generate->add_option("--mode", cfg.mode, "gcse or qcse");
  generate->add_option("--seed", cfg.seed, "Seed for --from random");
  generate->add_option("--out", cfg.out, "Output file");
  AddRandomOptions(generate, cfg);

  CLI::App* export_ip =
      app.add_subcommand("export-ip", "Write the integer program as LP text");
  export_ip->add_option("instance", cfg.input, "Instance file")->required();
  export_ip->add_option("--out", cfg.out, "Output file");

  CLI::App* bench = app.add_subcommand("bench", "Time solvers, CSV output");
  bench->add_option("inputs", cfg.inputs, "Instance files or directories");
  bench->add_option("--algo", cfg.algos, "Comma-separated algorithms");
  bench->add_option("--random", cfg.random_count,
                    "Also run this many random instances");
  bench->add_option("--seed", cfg.seed, "First seed for --random");
  bench->add_option("--mode", cfg.mode, "Mode for --random");
  bench->add_option("--max-nodes", cfg.max_nodes, "Search node budget");
  bench->add_option("--out", cfg.out, "Output file");
  AddRandomOptions(bench, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return CmdSolve(cfg, out);
    if (verify->parsed()) return CmdVerify(cfg, out);
    if (kernelize->parsed()) return CmdKernelize(cfg, out);
    if (generate->parsed()) return CmdGenerate(cfg, out);
    if (export_ip->parsed()) return CmdExportIp(cfg, out);
    if (bench->parsed()) return CmdBench(cfg, out);
  } catch (const LimitError& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ecse::cli
