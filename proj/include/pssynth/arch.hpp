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

// Hardware model: directed CNOT coupling map, per-gate error rates, and the
// legal action pool derived from them.
//
// Architecture files are line-oriented `key = value` text. Values are JSON
// literals except `name`, which may be bare:
//
//   name = tenerife
//   qubits = 5
//   edges = [[1,0],[2,0],[2,1],[3,2],[3,4],[4,2]]
//   errors = {"h": 0.001, "x": 0.001, "y": 0.001, "z": 0.001, "cnot": 0.02}
//   errors.cnot_edges = {"3-4": 0.025}
//
// `qubits` defaults to one past the largest edge endpoint, `errors` entries
// default to ErrorTable::defaults(), and `errors.<kind> = v` sets one entry.

#pragma once

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pssynth/qcore.hpp"

namespace pssynth {

struct CouplingEdge {
  Qubit control;
  Qubit target;

  friend auto operator<=>(const CouplingEdge&, const CouplingEdge&) = default;
};

struct ErrorTable {
  /// Indexed by GateKind.
  std::array<double, 5> per_kind{};
  /// Overrides per_kind[CNOT] on specific edges.
  std::map<CouplingEdge, double> cnot_edges;

  /// 0.001 for each single-qubit kind, 0.02 for CNOT.
  static ErrorTable defaults();
  static ErrorTable zero();

  double& operator[](GateKind kind) { return per_kind[static_cast<std::size_t>(kind)]; }
  double operator[](GateKind kind) const { return per_kind[static_cast<std::size_t>(kind)]; }

  double error_of(const GateInstruction& instr) const;

  friend bool operator==(const ErrorTable&, const ErrorTable&) = default;
};

struct Architecture {
  std::string name;
  int n_physical_qubits = 0;
  std::set<CouplingEdge> cnot_edges;
  ErrorTable errors = ErrorTable::defaults();

  bool has_edge(Qubit control, Qubit target) const {
    return cnot_edges.contains(CouplingEdge{control, target});
  }

  /// True if the instruction only touches qubits below n_qubits and any CNOT
  /// lies on a coupling edge.
  bool allows(const GateInstruction& instr, int n_qubits) const;

  friend bool operator==(const Architecture&, const Architecture&) = default;
};

/// IBM QX4 "Tenerife": 5 qubits, CNOT edges 1->0, 2->0, 2->1, 3->2, 3->4, 4->2.
Architecture default_tenerife();

/// Throws ParseError (with line) on malformed input, duplicate keys or edges,
/// self-loops, out-of-range endpoints and negative error rates.
Architecture load_architecture(std::string_view text);
Architecture load_architecture_file(const std::filesystem::path& path);

/// Canonical text form; load_architecture(serialize_architecture(a)) == a.
std::string serialize_architecture(const Architecture& arch);

/// The agent's action pool, sorted by kind, then target, then control.
struct ActionSpace {
  std::vector<GateInstruction> actions;

  std::size_t size() const noexcept { return actions.size(); }
  bool contains(const GateInstruction& instr) const;
};

/// {H,X,Y,Z} on each of the first n_qubits physical qubits plus one CNOT per
/// coupling edge inside that range. Throws std::invalid_argument if n_qubits
/// exceeds the device.
ActionSpace legal_actions(int n_qubits, const Architecture& arch);

/// Sum of per-gate errors. Throws std::invalid_argument if an instruction is
/// not legal on the device.
double circuit_error_sum(std::span<const GateInstruction> circuit, const Architecture& arch);

}  // namespace pssynth
