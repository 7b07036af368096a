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

#include "pssynth/circuit_text.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "pssynth/errors.hpp"

namespace pssynth {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Qubit parse_qubit(std::string_view token, int line) {
  Qubit q = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), q);
  if (ec != std::errc{} || ptr != token.data() + token.size() || q >= kMaxQubits) {
    throw ParseError(line, "bad qubit index '" + std::string(token) + "'");
  }
  return q;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    const auto kind = parse_gate_kind(tokens[0]);
    if (!kind) {
      throw ParseError(line_no, "unknown gate '" + std::string(tokens[0]) + "'");
    }
    if (*kind == GateKind::CNOT) {
      if (tokens.size() != 3) throw ParseError(line_no, "CNOT takes <control> <target>");
      const Qubit control = parse_qubit(tokens[1], line_no);
      const Qubit target = parse_qubit(tokens[2], line_no);
      if (control == target) throw ParseError(line_no, "CNOT control equals target");
      circuit.push_back(GateInstruction::cnot(control, target));
    } else {
      if (tokens.size() != 2) {
        throw ParseError(line_no, std::string(gate_name(*kind)) + " takes one qubit");
      }
      circuit.push_back(GateInstruction::single(*kind, parse_qubit(tokens[1], line_no)));
    }
  }
  return circuit;
}

std::string format_circuit(std::span<const GateInstruction> circuit) {
  std::string out;
  for (const auto& instr : circuit) {
    out += to_string(instr);
    out += '\n';
  }
  return out;
}

std::string to_openqasm(std::span<const GateInstruction> circuit, int n_qubits) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << n_qubits << "];\n";
  for (const auto& instr : circuit) {
    if (instr.max_qubit() >= static_cast<Qubit>(n_qubits)) {
      throw std::invalid_argument("instruction '" + to_string(instr) + "' exceeds register size");
    }
    switch (instr.kind) {
      case GateKind::H: os << "h"; break;
      case GateKind::X: os << "x"; break;
      case GateKind::Y: os << "y"; break;
      case GateKind::Z: os << "z"; break;
      case GateKind::CNOT:
        os << "cx q[" << *instr.control << "],q[" << instr.target << "];\n";
        continue;
    }
    os << " q[" << instr.target << "];\n";
  }
  return os.str();
}

int parallel_depth(std::span<const GateInstruction> circuit) {
  std::map<Qubit, int> frontier;
  int depth = 0;
  for (const auto& instr : circuit) {
    int layer = frontier[instr.target];
    if (instr.control) layer = std::max(layer, frontier[*instr.control]);
    ++layer;
    frontier[instr.target] = layer;
    if (instr.control) frontier[*instr.control] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

StateVector simulate(std::span<const GateInstruction> circuit, int n_qubits) {
  StateVector state = zero_state(n_qubits);
  for (const auto& instr : circuit) {
    state = apply_gate(state, instr);
  }
  return state;
}

}  // namespace pssynth
