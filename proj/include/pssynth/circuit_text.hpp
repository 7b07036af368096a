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

// Circuit text format: one instruction per line, `H 0`, `X 2`,
// `CNOT <control> <target>`. Blank lines and `#` comments are ignored.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pssynth/qcore.hpp"

namespace pssynth {

using Circuit = std::vector<GateInstruction>;

/// Throws ParseError with the offending line number.
Circuit parse_circuit(std::string_view text);

/// Canonical form: one instruction per line, newline-terminated, no comments.
std::string format_circuit(std::span<const GateInstruction> circuit);

/// OpenQASM 2.0 with a single `q` register of n_qubits.
std::string to_openqasm(std::span<const GateInstruction> circuit, int n_qubits);

/// Layered depth: the number of time steps when gates on disjoint qubits run
/// in parallel. Distinct from the gate count the learner uses as "depth".
int parallel_depth(std::span<const GateInstruction> circuit);

/// Folds the circuit over |0...0>.
StateVector simulate(std::span<const GateInstruction> circuit, int n_qubits);

}  // namespace pssynth
