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

// Experiment orchestration: configuration, seeded runs, multi-seed sweeps and
// the on-disk artifacts of a run.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pssynth/arch.hpp"
#include "pssynth/synthenv.hpp"

namespace pssynth {

inline constexpr std::string_view kBuiltinTenerife = "builtin:tenerife";

struct ExperimentConfig {
  int n_qubits = 2;
  int episodes = 1000;
  double damping = 0.1;
  double glow_decay = 0.1;
  int max_depth = 4;
  double base_value = 100.0;
  TargetState goal = TargetState::bell00();
  double goal_tolerance = 1e-6;
  /// kBuiltinTenerife or a path to an architecture file.
  std::string arch_file = std::string(kBuiltinTenerife);
  std::uint64_t seed = 1;
  bool composition = false;
  double composition_threshold = 10.0;
  PenaltyRatio penalty_ratio = PenaltyRatio::DminOverDi;
  /// Empty: keep results in memory only.
  std::filesystem::path out_dir;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Per-size defaults: gamma = eta = 0.1; max depth 4..7, base reward
/// 100..250 and episodes 1000/5000/20000/30000 for 2..5 qubits; Bell00 for
/// two qubits, GHZ(n) otherwise. Throws std::invalid_argument outside [2, 5].
ExperimentConfig default_config(int n_qubits);

/// Throws std::invalid_argument describing the first bad field.
void validate(const ExperimentConfig& cfg);

/// `key = value` lines; parse_config_echo(echo_config(c)) == c.
std::string echo_config(const ExperimentConfig& cfg);
/// Starts from default_config(n_qubits) and applies every key present.
/// Throws ParseError.
ExperimentConfig parse_config_echo(std::string_view text);

Architecture resolve_architecture(const ExperimentConfig& cfg);

struct EpisodeLog {
  int episode = 0;
  Outcome outcome = Outcome::Fail;
  double reward = 0.0;
  int gates = 0;
  int cumulative_distinct = 0;

  friend bool operator==(const EpisodeLog&, const EpisodeLog&) = default;
};

struct RunSummary {
  int distinct_circuits = 0;
  int successes = 0;
  /// Shortest successful gate count; 0 when nothing was found.
  int min_depth = 0;
  double wall_clock_seconds = 0.0;
};

struct RunRecord {
  ExperimentConfig config;
  std::vector<EpisodeLog> episodes;
  CircuitRegistry registry;
  RunSummary summary;
  std::string ecm_snapshot;
};

/// Runs cfg.episodes episodes from a fresh agent. Deterministic in
/// (cfg, cfg.seed) apart from wall-clock time. Writes artifacts to
/// cfg.out_dir when it is set; throws IoError if that fails.
RunRecord run_experiment(const ExperimentConfig& cfg);

/// Runs n_seeds independent copies with seeds cfg.seed, cfg.seed + 1, ...
/// in parallel. Each run writes into out_dir/seed_<seed> when out_dir is set.
/// The result is ordered by seed.
std::vector<RunRecord> run_sweep(const ExperimentConfig& cfg, int n_seeds);

struct SweepSummary {
  struct PerSeed {
    std::uint64_t seed;
    int distinct_circuits;
    int min_depth;
  };
  std::vector<PerSeed> runs;  // sorted by seed
  double median_distinct = 0.0;
  /// Union of every run's circuits, in canonical text form, sorted.
  std::vector<std::string> all_circuits;
};

/// Order-independent merge of sweep results.
SweepSummary merge_runs(std::span<const RunRecord> runs);

double median(std::vector<double> values);

// Artifact writers. Each returns the text that write_artifacts() stores.
std::string episodes_csv(const RunRecord& record);
std::string summary_csv(const RunRecord& record);
std::string circuit_index_csv(const RunRecord& record);
std::string learning_curve_svg(const RunRecord& record);
std::string sweep_summary_csv(const SweepSummary& summary, const ExperimentConfig& cfg);

/// Writes episodes.csv, summary.csv, learning_curve.svg, circuits/NNNN.txt,
/// circuits/index.csv, ecm_snapshot.txt and config.echo into out_dir and
/// returns the written paths relative to out_dir. Throws IoError; on failure
/// a PARTIAL marker is left behind when possible.
std::vector<std::string> write_artifacts(const RunRecord& record, const std::filesystem::path& out_dir);

/// "0001.txt" style file name for the i-th (0-based) registered circuit.
std::string circuit_file_name(std::size_t index);

}  // namespace pssynth
