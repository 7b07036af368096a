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

#include "pssynth/synthenv.hpp"

#include <algorithm>
#include <stdexcept>

namespace pssynth {

const char* to_string(PenaltyRatio ratio) {
  return ratio == PenaltyRatio::DminOverDi ? "dmin_over_di" : "di_over_dmin";
}

std::optional<PenaltyRatio> parse_penalty_ratio(std::string_view text) {
  if (text == "dmin_over_di") return PenaltyRatio::DminOverDi;
  if (text == "di_over_dmin") return PenaltyRatio::DiOverDmin;
  return std::nullopt;
}

RewardConfig RewardConfig::make(double base_value, int max_depth, TargetState goal,
                                double goal_tolerance, PenaltyRatio ratio) {
  if (!(base_value > 0.0)) throw std::invalid_argument("base_value must be positive");
  if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  return RewardConfig{base_value, max_depth, goal, goal_tolerance, max_depth, ratio};
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Continue: return "continue";
    case Outcome::Goal: return "goal";
    case Outcome::Fail: return "fail";
  }
  return "?";
}

EpisodeState reset(int n_qubits) { return EpisodeState{zero_state(n_qubits), {}, 0, {}}; }

StepResult step(EpisodeState& env, const GateInstruction& instr, const RewardConfig& cfg,
                const Architecture& arch) {
  const int n = env.state.n_qubits();
  if (!arch.allows(instr, n)) {
    throw std::invalid_argument("gate '" + to_string(instr) + "' is not legal on " + arch.name +
                                " with " + std::to_string(n) + " qubits");
  }
  if (env.steps >= cfg.max_depth) {
    throw std::invalid_argument("episode already used its " + std::to_string(cfg.max_depth) + " gates");
  }

  env.state = apply_gate(env.state, instr);
  env.circuit.push_back(instr);
  ++env.steps;

  const double f = fidelity(env.state, target_state(cfg.goal, n));
  if (f >= 1.0 - cfg.goal_tolerance) {
    return {Outcome::Goal, f, compute_reward(env.circuit, cfg, arch)};
  }
  return {env.steps >= cfg.max_depth ? Outcome::Fail : Outcome::Continue, f, 0.0};
}

double compute_reward(std::span<const GateInstruction> circuit, const RewardConfig& cfg,
                      const Architecture& arch) {
  if (circuit.empty()) throw std::invalid_argument("cannot reward an empty circuit");
  const double errors = circuit_error_sum(circuit, arch);
  const double d_i = static_cast<double>(circuit.size());
  const double d_min = static_cast<double>(cfg.d_min);
  const double ratio = cfg.penalty_ratio == PenaltyRatio::DminOverDi ? d_min / d_i : d_i / d_min;
  return cfg.base_value - errors * ratio;
}

void update_dmin(RewardConfig& cfg, int successful_depth) {
  if (successful_depth < 1) throw std::invalid_argument("successful depth must be at least 1");
  cfg.d_min = std::min(cfg.d_min, successful_depth);
}

bool CircuitRegistry::register_circuit(const SynthesisResult& result) {
  if (!seen_.insert(format_circuit(result.circuit)).second) return false;
  results_.push_back(result);
  return true;
}

bool CircuitRegistry::contains(std::span<const GateInstruction> circuit) const {
  return seen_.contains(format_circuit(circuit));
}

}  // namespace pssynth
