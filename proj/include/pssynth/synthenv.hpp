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

// Circuit-building environment. An episode starts from an empty circuit on
// |0...0> and appends one gate per step until the state matches the goal or
// the gate budget runs out.
//
// "Depth" here is the number of gates placed (d_i, d_min, max_depth). The
// layered depth of a circuit is reported separately as parallel_depth.

#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pssynth/arch.hpp"
#include "pssynth/circuit_text.hpp"
#include "pssynth/ecm.hpp"
#include "pssynth/qcore.hpp"

namespace pssynth {

/// How the error penalty scales with circuit length.
enum class PenaltyRatio : std::uint8_t {
  DminOverDi,  // base - sum(e) * d_min / d_i
  DiOverDmin,  // base - sum(e) * d_i / d_min
};

const char* to_string(PenaltyRatio ratio);
std::optional<PenaltyRatio> parse_penalty_ratio(std::string_view text);

struct RewardConfig {
  double base_value = 100.0;
  int max_depth = 4;
  TargetState goal = TargetState::bell00();
  double goal_tolerance = 1e-6;
  int d_min = 4;
  PenaltyRatio penalty_ratio = PenaltyRatio::DminOverDi;

  /// d_min starts at max_depth.
  static RewardConfig make(double base_value, int max_depth, TargetState goal,
                           double goal_tolerance = 1e-6,
                           PenaltyRatio ratio = PenaltyRatio::DminOverDi);
};

struct EpisodeState {
  StateVector state;
  Circuit circuit;
  int steps = 0;
  std::vector<ClipId> new_percepts;
};

enum class Outcome : std::uint8_t { Continue, Goal, Fail };

const char* to_string(Outcome outcome);

struct StepResult {
  Outcome outcome;
  double fidelity;
  double reward;  // non-zero only on Goal
};

EpisodeState reset(int n_qubits);

/// Appends `instr`, applies it and checks the goal. Throws
/// std::invalid_argument if the gate is not legal on `arch` for this circuit
/// width or the gate budget is already spent.
StepResult step(EpisodeState& env, const GateInstruction& instr, const RewardConfig& cfg,
                const Architecture& arch);

/// base_value - circuit_error_sum * ratio, ratio per cfg.penalty_ratio with
/// d_i = circuit length. Throws std::invalid_argument on an empty circuit.
double compute_reward(std::span<const GateInstruction> circuit, const RewardConfig& cfg,
                      const Architecture& arch);

/// d_min <- min(d_min, successful_depth).
void update_dmin(RewardConfig& cfg, int successful_depth);

struct SynthesisResult {
  Circuit circuit;
  int depth_gates = 0;
  int parallel_depth = 0;
  double reward = 0.0;
  int episode = 0;
  double fidelity = 0.0;
};

/// Distinct successful circuits, keyed by exact instruction sequence, kept in
/// order of first discovery.
class CircuitRegistry {
 public:
  /// Returns true if the circuit had not been registered before.
  bool register_circuit(const SynthesisResult& result);

  bool contains(std::span<const GateInstruction> circuit) const;
  std::size_t size() const noexcept { return results_.size(); }
  const std::vector<SynthesisResult>& results() const noexcept { return results_; }

 private:
  std::set<std::string> seen_;
  std::vector<SynthesisResult> results_;
};

}  // namespace pssynth
