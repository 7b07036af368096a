// Copyright 2026 The pssynth Authors
//
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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pssynth/arch.hpp"
#include "pssynth/circuit_text.hpp"
#include "pssynth/errors.hpp"
#include "pssynth/runner.hpp"

namespace pssynth::cli {
namespace {

struct RunOptions {
  int qubits = 2;
  std::optional<int> episodes;
  std::uint64_t seed = 1;
  std::optional<double> gamma;
  std::optional<double> eta;
  std::optional<int> max_depth;
  std::optional<double> base_reward;
  std::string arch = std::string(kBuiltinTenerife);
  std::string out;
  bool composition = false;
  std::optional<double> composition_threshold;
  std::string penalty_ratio = "dmin_over_di";
  int seeds = 1;
};

struct ReplayOptions {
  std::string file;
  std::string goal;
  std::string arch = std::string(kBuiltinTenerife);
};

struct ExportOptions {
  std::string file;
  std::optional<int> qubits;
  std::string out;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Architecture load_arch(const std::string& source) {
  if (source.empty() || source == kBuiltinTenerife) return default_tenerife();
  return load_architecture_file(source);
}

int do_run(const RunOptions& o, std::ostream& out) {
  ExperimentConfig cfg = default_config(o.qubits);
  if (o.episodes) cfg.episodes = *o.episodes;
  if (o.gamma) cfg.damping = *o.gamma;
  if (o.eta) cfg.glow_decay = *o.eta;
  if (o.max_depth) cfg.max_depth = *o.max_depth;
  if (o.base_reward) cfg.base_value = *o.base_reward;
  if (o.composition_threshold) cfg.composition_threshold = *o.composition_threshold;
  cfg.arch_file = o.arch;
  cfg.seed = o.seed;
  cfg.composition = o.composition;
  cfg.penalty_ratio = *parse_penalty_ratio(o.penalty_ratio);
  cfg.out_dir = o.out.empty()
                    ? std::filesystem::path("pssynth_runs") /
                          ("q" + std::to_string(o.qubits) + "_seed" + std::to_string(o.seed))
                    : std::filesystem::path(o.out);
  validate(cfg);

  if (o.seeds == 1) {
    const RunRecord record = run_experiment(cfg);
    out << cfg.goal.name() << " seed " << cfg.seed << ": " << record.summary.distinct_circuits
        << " distinct circuits, " << record.summary.successes << " successful episodes of "
        << cfg.episodes;
    if (record.summary.min_depth > 0) out << ", shortest " << record.summary.min_depth << " gates";
    out << "\nartifacts: " << cfg.out_dir.string() << "\n";
    return kOk;
  }

  const auto records = run_sweep(cfg, o.seeds);
  const SweepSummary summary = merge_runs(records);
  std::filesystem::create_directories(cfg.out_dir);
  {
    std::ofstream csv(cfg.out_dir / "sweep_summary.csv");
    csv << sweep_summary_csv(summary, cfg);
    if (!csv) throw IoError("cannot write " + (cfg.out_dir / "sweep_summary.csv").string());
  }
  for (const auto& run : summary.runs) {
    out << cfg.goal.name() << " seed " << run.seed << ": " << run.distinct_circuits << " distinct circuits\n";
  }
  out << "median distinct circuits: " << summary.median_distinct << ", union over seeds: "
      << summary.all_circuits.size() << "\nartifacts: " << cfg.out_dir.string() << "\n";
  return kOk;
}

int do_replay(const ReplayOptions& o, std::ostream& out, std::ostream& err) {
  const auto goal = parse_target(o.goal);
  if (!goal) {
    err << "unknown goal '" << o.goal << "' (expected bell, ghz3, ghz4 or ghz5)\n";
    return kUsage;
  }
  const Circuit circuit = parse_circuit(read_text(o.file));
  const Architecture arch = load_arch(o.arch);
  const int n = goal->n_qubits;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    if (!arch.allows(circuit[i], n)) {
      err << o.file << ": gate " << i + 1 << " '" << to_string(circuit[i]) << "' is not legal on "
          << arch.name << " with " << n << " qubits\n";
      return kGoalMissed;
    }
  }
  const double f = fidelity(simulate(circuit, n), target_state(*goal, n));
  char line[64];
  std::snprintf(line, sizeof line, "%.6f", f);
  const bool reached = f >= 1.0 - 1e-6;
  out << "fidelity " << line << "\n"
      << "gates " << circuit.size() << ", parallel depth " << parallel_depth(circuit) << "\n"
      << "goal " << goal->name() << (reached ? " reached" : " not reached") << "\n";
  return reached ? kOk : kGoalMissed;
}

int do_export(const ExportOptions& o, std::ostream& out) {
  const Circuit circuit = parse_circuit(read_text(o.file));
  int n = o.qubits.value_or(0);
  if (!o.qubits) {
    for (const auto& instr : circuit) n = std::max(n, static_cast<int>(instr.max_qubit()) + 1);
    n = std::max(n, 1);
  }
  const std::string qasm = to_openqasm(circuit, n);
  if (o.out.empty()) {
    out << qasm;
  } else {
    std::ofstream file(o.out);
    file << qasm;
    if (!file) throw IoError("cannot write " + o.out);
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective Simulation synthesizer for entangled-state circuits", "pssynth"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Train an agent and export the circuits it finds");
  run_cmd->add_option("--qubits", run_opts.qubits, "Circuit width (2-5)")->check(CLI::Range(2, 5));
  run_cmd->add_option("--episodes", run_opts.episodes, "Episode budget")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--seed", run_opts.seed, "RNG seed (first seed of a sweep)");
  run_cmd->add_option("--gamma", run_opts.gamma, "Damping parameter")->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--eta", run_opts.eta, "Glow decay")->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--max-depth", run_opts.max_depth, "Gate budget per episode")->check(CLI::PositiveNumber);
  run_cmd->add_option("--base-reward", run_opts.base_reward, "Reward base value")->check(CLI::PositiveNumber);
  run_cmd->add_option("--arch", run_opts.arch, "Architecture file or builtin:tenerife");
  run_cmd->add_option("--out", run_opts.out, "Output directory");
  run_cmd->add_flag("--composition", run_opts.composition, "Enable action-clip composition");
  run_cmd->add_option("--composition-threshold", run_opts.composition_threshold,
                      "Minimum h-value for composition");
  run_cmd->add_option("--penalty-ratio", run_opts.penalty_ratio, "dmin_over_di or di_over_dmin")
      ->check(CLI::IsMember({"dmin_over_di", "di_over_dmin"}));
  run_cmd->add_option("--seeds", run_opts.seeds, "Number of seeds to sweep")->check(CLI::PositiveNumber);

  ReplayOptions replay_opts;
  auto* replay_cmd = app.add_subcommand("replay", "Validate and simulate a circuit file against a target");
  replay_cmd->add_option("file", replay_opts.file, "Circuit text file")->required();
  replay_cmd->add_option("--goal", replay_opts.goal, "bell, ghz3, ghz4 or ghz5")->required();
  replay_cmd->add_option("--arch", replay_opts.arch, "Architecture file or builtin:tenerife");

  ExportOptions export_opts;
  auto* export_cmd = app.add_subcommand("export-qasm", "Convert a circuit file to OpenQASM 2.0");
  export_cmd->add_option("file", export_opts.file, "Circuit text file")->required();
  export_cmd->add_option("--qubits", export_opts.qubits, "Register size (default: widest qubit + 1)")
      ->check(CLI::Range(1, kMaxQubits));
  export_cmd->add_option("-o,--output", export_opts.out, "Write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return do_run(run_opts, out);
    if (*replay_cmd) return do_replay(replay_opts, out, err);
    if (*export_cmd) return do_export(export_opts, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kRuntime;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kUsage;
}

}  // namespace pssynth::cli
