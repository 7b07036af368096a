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

#include "pssynth/runner.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <set>

#include "pssynth/ecm.hpp"

namespace pssynth {
namespace {

// Tries every pair of action clips reached from the percepts of a rewarded
// walk. With the full legal pool already present this only adds clips when
// the pool was restricted.
void compose_after_reward(Ecm& ecm, const ActionSpace& legal, double threshold, int episode) {
  std::set<ClipId> percepts;
  for (const auto& edge : ecm.trace()) percepts.insert(edge.percept);
  for (const ClipId percept : percepts) {
    std::vector<ClipId> strong;
    for (const auto& action : ecm.actions()) {
      if (ecm.h_value(percept, action.id) >= threshold) strong.push_back(action.id);
    }
    for (std::size_t i = 0; i < strong.size(); ++i) {
      for (std::size_t j = i + 1; j < strong.size(); ++j) {
        ecm.compose_actions(percept, strong[i], strong[j], threshold, legal, episode);
      }
    }
  }
}

}  // namespace

RunRecord run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto started = std::chrono::steady_clock::now();

  const Architecture arch = resolve_architecture(cfg);
  const ActionSpace actions = legal_actions(cfg.n_qubits, arch);
  RewardConfig reward_cfg = RewardConfig::make(cfg.base_value, cfg.max_depth, cfg.goal,
                                               cfg.goal_tolerance, cfg.penalty_ratio);
  Ecm ecm(actions, zero_state(cfg.n_qubits), EcmParams{cfg.damping, cfg.glow_decay}, cfg.seed);

  RunRecord record;
  record.config = cfg;
  record.episodes.reserve(static_cast<std::size_t>(cfg.episodes));

  for (int episode = 0; episode < cfg.episodes; ++episode) {
    EpisodeState env = reset(cfg.n_qubits);
    ecm.begin_episode();
    EpisodeLog log{episode, Outcome::Fail, 0.0, 0, 0};

    while (true) {
      const auto percept = ecm.percept_to_clip(env.state, episode);
      if (percept.created) env.new_percepts.push_back(percept.id);
      const auto choice = ecm.sample_action(percept.id);
      const StepResult result = step(env, choice.instr, reward_cfg, arch);
      ecm.update(result.reward);

      if (result.outcome == Outcome::Continue) continue;
      log.outcome = result.outcome;
      log.gates = env.steps;
      if (result.outcome == Outcome::Goal) {
        log.reward = result.reward;
        ++record.summary.successes;
        record.registry.register_circuit(SynthesisResult{env.circuit, env.steps,
                                                         parallel_depth(env.circuit), result.reward,
                                                         episode, result.fidelity});
        update_dmin(reward_cfg, env.steps);
        if (cfg.composition) {
          compose_after_reward(ecm, actions, cfg.composition_threshold, episode);
        }
      } else {
        ecm.prune_percepts(env.new_percepts);
      }
      break;
    }
    log.cumulative_distinct = static_cast<int>(record.registry.size());
    record.episodes.push_back(log);
  }

  record.summary.distinct_circuits = static_cast<int>(record.registry.size());
  for (const auto& r : record.registry.results()) {
    if (record.summary.min_depth == 0 || r.depth_gates < record.summary.min_depth) {
      record.summary.min_depth = r.depth_gates;
    }
  }
  record.ecm_snapshot = ecm.snapshot();
  record.summary.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (!cfg.out_dir.empty()) {
    write_artifacts(record, cfg.out_dir);
  }
  return record;
}

std::vector<RunRecord> run_sweep(const ExperimentConfig& cfg, int n_seeds) {
  if (n_seeds < 1) throw std::invalid_argument("a sweep needs at least one seed");
  validate(cfg);

  std::vector<RunRecord> records(static_cast<std::size_t>(n_seeds));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n_seeds));

#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n_seeds; ++k) {
    ExperimentConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(k);
    if (!cfg.out_dir.empty()) {
      run_cfg.out_dir = cfg.out_dir / ("seed_" + std::to_string(run_cfg.seed));
    }
    try {
      records[static_cast<std::size_t>(k)] = run_experiment(run_cfg);
    } catch (...) {
      failures[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return records;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

SweepSummary merge_runs(std::span<const RunRecord> runs) {
  SweepSummary summary;
  std::set<std::string> circuits;
  std::vector<double> counts;
  for (const auto& run : runs) {
    summary.runs.push_back({run.config.seed, run.summary.distinct_circuits, run.summary.min_depth});
    counts.push_back(run.summary.distinct_circuits);
    for (const auto& r : run.registry.results()) circuits.insert(format_circuit(r.circuit));
  }
  std::sort(summary.runs.begin(), summary.runs.end(),
            [](const auto& a, const auto& b) { return a.seed < b.seed; });
  summary.median_distinct = median(std::move(counts));
  summary.all_circuits.assign(circuits.begin(), circuits.end());
  return summary;
}

}  // namespace pssynth
