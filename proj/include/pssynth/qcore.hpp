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

// Dense state-vector simulation for the synthesizer's gate set.
//
// Qubit indexing is little-endian everywhere in pssynth: qubit 0 is the least
// significant bit of a basis index, so |q1 q0> = |10> is index 2.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pssynth/kernels.hpp"

namespace pssynth {

using Qubit = std::uint32_t;

inline constexpr int kMaxQubits = 10;
inline constexpr double kNormTolerance = 1e-10;

enum class GateKind : std::uint8_t { H, X, Y, Z, CNOT };

inline constexpr GateKind kAllGateKinds[] = {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z,
                                             GateKind::CNOT};

const char* gate_name(GateKind kind);
/// Case-insensitive; accepts "CX" for CNOT.
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// A gate placement. `control` is set iff kind is CNOT. Ordering is by kind,
/// then target, then control (single-qubit gates first within a target).
struct GateInstruction {
  GateKind kind;
  Qubit target;
  std::optional<Qubit> control;

  static GateInstruction single(GateKind kind, Qubit target);
  static GateInstruction cnot(Qubit control, Qubit target);

  bool is_two_qubit() const noexcept { return kind == GateKind::CNOT; }
  /// Largest qubit index referenced.
  Qubit max_qubit() const noexcept;

  friend auto operator<=>(const GateInstruction&, const GateInstruction&) = default;
  friend bool operator==(const GateInstruction&, const GateInstruction&) = default;
};

/// "H 0", "CNOT 1 0" (control first).
std::string to_string(const GateInstruction& instr);

class StateVector {
 public:
  /// Throws std::invalid_argument unless amps has length 2^n_qubits and
  /// unit norm within kNormTolerance.
  StateVector(int n_qubits, std::vector<Amplitude> amps);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

 private:
  friend StateVector apply_gate(const StateVector&, const GateInstruction&);
  struct Unchecked {};
  StateVector(Unchecked, int n_qubits, std::vector<Amplitude> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Row-major square operator. For CNOT the 4x4 basis order is |control target>
/// with the control as the high bit.
struct GateMatrix {
  int dim;
  std::vector<Amplitude> entries;

  const Amplitude& at(int row, int col) const { return entries[static_cast<std::size_t>(row * dim + col)]; }
};

GateMatrix gate_matrix(GateKind kind);

StateVector zero_state(int n_qubits);

/// Throws std::invalid_argument if the instruction references a qubit
/// outside the state or has control == target.
StateVector apply_gate(const StateVector& state, const GateInstruction& instr);

/// |<a|b>|^2. Throws std::invalid_argument on dimension mismatch.
double fidelity(const StateVector& a, const StateVector& b);

struct TargetState {
  enum class Kind : std::uint8_t { Bell00, Ghz };

  Kind kind;
  int n_qubits;

  static TargetState bell00() { return {Kind::Bell00, 2}; }
  /// n in [3, 5].
  static TargetState ghz(int n);

  /// "Bell00", "GHZ3", ...
  std::string name() const;

  friend bool operator==(const TargetState&, const TargetState&) = default;
};

/// Accepts "bell", "bell00", "ghz3".."ghz5" (case-insensitive).
std::optional<TargetState> parse_target(std::string_view name);

/// Throws std::invalid_argument when n_qubits does not match the target's arity.
StateVector target_state(TargetState target, int n_qubits);

}  // namespace pssynth
