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

#include "pssynth/arch.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pssynth/errors.hpp"

namespace pssynth {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string lower_kind_name(GateKind kind) {
  std::string s = gate_name(kind);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_rate(const json& value, int line, const std::string& what) {
  if (!value.is_number()) throw ParseError(line, what + " must be a number");
  const double rate = value.get<double>();
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw ParseError(line, what + " must be a finite non-negative rate");
  }
  return rate;
}

CouplingEdge parse_edge_key(const std::string& key, int line) {
  const auto dash = key.find('-');
  if (dash == std::string::npos) throw ParseError(line, "edge key '" + key + "' is not 'c-t'");
  CouplingEdge e{};
  const auto* begin = key.data();
  const auto* end = key.data() + key.size();
  const auto r1 = std::from_chars(begin, begin + dash, e.control);
  const auto r2 = std::from_chars(begin + dash + 1, end, e.target);
  if (r1.ec != std::errc{} || r1.ptr != begin + dash || r2.ec != std::errc{} || r2.ptr != end) {
    throw ParseError(line, "edge key '" + key + "' is not 'c-t'");
  }
  return e;
}

}  // namespace

ErrorTable ErrorTable::defaults() {
  ErrorTable t;
  t[GateKind::H] = 0.001;
  t[GateKind::X] = 0.001;
  t[GateKind::Y] = 0.001;
  t[GateKind::Z] = 0.001;
  t[GateKind::CNOT] = 0.02;
  return t;
}

ErrorTable ErrorTable::zero() { return ErrorTable{}; }

double ErrorTable::error_of(const GateInstruction& instr) const {
  if (instr.control) {
    if (const auto it = cnot_edges.find({*instr.control, instr.target}); it != cnot_edges.end()) {
      return it->second;
    }
  }
  return (*this)[instr.kind];
}

bool Architecture::allows(const GateInstruction& instr, int n_qubits) const {
  const auto n = static_cast<Qubit>(std::min(n_qubits, n_physical_qubits));
  if (instr.target >= n) return false;
  if (instr.kind != GateKind::CNOT) return !instr.control.has_value();
  return instr.control && *instr.control < n && has_edge(*instr.control, instr.target);
}

Architecture default_tenerife() {
  Architecture arch;
  arch.name = "tenerife";
  arch.n_physical_qubits = 5;
  arch.cnot_edges = {{1, 0}, {2, 0}, {2, 1}, {3, 2}, {3, 4}, {4, 2}};
  arch.errors = ErrorTable::defaults();
  return arch;
}

Architecture load_architecture(std::string_view text) {
  Architecture arch;
  arch.name = "custom";
  std::set<std::string> seen;
  std::optional<int> declared_qubits;
  int qubits_line = 0;
  std::map<CouplingEdge, int> edge_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view raw = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate key '" + key + "'");

    if (key == "name") {
      std::string name(raw);
      if (name.size() >= 2 && name.front() == '"' && name.back() == '"') {
        name = json::parse(name).get<std::string>();
      }
      if (name.empty()) throw ParseError(line_no, "empty name");
      arch.name = name;
      continue;
    }

    json value;
    try {
      value = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, "bad value for '" + key + "': " + e.what());
    }

    if (key == "qubits") {
      if (!value.is_number_integer() || value.get<long>() < 1 || value.get<long>() > kMaxQubits) {
        throw ParseError(line_no, "qubits must be an integer in [1, " + std::to_string(kMaxQubits) + "]");
      }
      declared_qubits = value.get<int>();
      qubits_line = line_no;
    } else if (key == "edges") {
      if (!value.is_array()) throw ParseError(line_no, "edges must be an array of [control,target]");
      for (const auto& pair : value) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned()) {
          throw ParseError(line_no, "edge entries must be [control,target] with non-negative integers");
        }
        const CouplingEdge e{pair[0].get<Qubit>(), pair[1].get<Qubit>()};
        if (e.control >= static_cast<Qubit>(kMaxQubits) || e.target >= static_cast<Qubit>(kMaxQubits)) {
          throw ParseError(line_no, "edge endpoint out of range");
        }
        if (e.control == e.target) {
          throw ParseError(line_no, "self-loop edge [" + std::to_string(e.control) + "," +
                                        std::to_string(e.target) + "]");
        }
        if (!arch.cnot_edges.insert(e).second) {
          throw ParseError(line_no, "duplicate edge [" + std::to_string(e.control) + "," +
                                        std::to_string(e.target) + "]");
        }
        edge_lines[e] = line_no;
      }
    } else if (key == "errors") {
      if (!value.is_object()) throw ParseError(line_no, "errors must be an object");
      for (const auto& [kind_name, rate] : value.items()) {
        const auto kind = parse_gate_kind(kind_name);
        if (!kind) throw ParseError(line_no, "unknown gate kind '" + kind_name + "'");
        arch.errors[*kind] = parse_rate(rate, line_no, "error for " + kind_name);
      }
    } else if (key == "errors.cnot_edges") {
      if (!value.is_object()) throw ParseError(line_no, "errors.cnot_edges must be an object");
      for (const auto& [edge_key, rate] : value.items()) {
        const CouplingEdge e = parse_edge_key(edge_key, line_no);
        arch.errors.cnot_edges[e] = parse_rate(rate, line_no, "error for edge " + edge_key);
        edge_lines.try_emplace(e, line_no);
      }
    } else if (key.starts_with("errors.")) {
      const auto kind = parse_gate_kind(key.substr(7));
      if (!kind) throw ParseError(line_no, "unknown key '" + key + "'");
      arch.errors[*kind] = parse_rate(value, line_no, key);
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }

  for (const auto& [edge, rate] : arch.errors.cnot_edges) {
    if (!arch.cnot_edges.contains(edge)) {
      throw ParseError(edge_lines[edge], "error given for edge " + std::to_string(edge.control) + "-" +
                                             std::to_string(edge.target) + " which is not in edges");
    }
  }

  Qubit span = 0;
  for (const auto& e : arch.cnot_edges) span = std::max({span, e.control + 1, e.target + 1});
  if (declared_qubits) {
    if (static_cast<Qubit>(*declared_qubits) < span) {
      throw ParseError(qubits_line, "edges reference qubits beyond qubits = " +
                                        std::to_string(*declared_qubits));
    }
    arch.n_physical_qubits = *declared_qubits;
  } else {
    if (span == 0) throw ParseError(0, "architecture needs 'qubits' or at least one edge");
    arch.n_physical_qubits = static_cast<int>(span);
  }
  return arch;
}

Architecture load_architecture_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open architecture file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_architecture(buf.str());
}

std::string serialize_architecture(const Architecture& arch) {
  std::ostringstream os;
  os << "name = " << json(arch.name).dump() << "\n";
  os << "qubits = " << arch.n_physical_qubits << "\n";
  json edges = json::array();
  for (const auto& e : arch.cnot_edges) edges.push_back({e.control, e.target});
  os << "edges = " << edges.dump() << "\n";
  json errors = json::object();
  for (const GateKind kind : kAllGateKinds) errors[lower_kind_name(kind)] = arch.errors[kind];
  os << "errors = " << errors.dump() << "\n";
  if (!arch.errors.cnot_edges.empty()) {
    json per_edge = json::object();
    for (const auto& [e, rate] : arch.errors.cnot_edges) {
      per_edge[std::to_string(e.control) + "-" + std::to_string(e.target)] = rate;
    }
    os << "errors.cnot_edges = " << per_edge.dump() << "\n";
  }
  return os.str();
}

bool ActionSpace::contains(const GateInstruction& instr) const {
  return std::binary_search(actions.begin(), actions.end(), instr);
}

ActionSpace legal_actions(int n_qubits, const Architecture& arch) {
  if (n_qubits < 1 || n_qubits > arch.n_physical_qubits) {
    throw std::invalid_argument("cannot use " + std::to_string(n_qubits) + " qubits on " + arch.name +
                                " (" + std::to_string(arch.n_physical_qubits) + " physical)");
  }
  ActionSpace space;
  for (const GateKind kind : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z}) {
    for (Qubit q = 0; q < static_cast<Qubit>(n_qubits); ++q) {
      space.actions.push_back(GateInstruction::single(kind, q));
    }
  }
  for (const auto& e : arch.cnot_edges) {
    if (e.control < static_cast<Qubit>(n_qubits) && e.target < static_cast<Qubit>(n_qubits)) {
      space.actions.push_back(GateInstruction::cnot(e.control, e.target));
    }
  }
  std::sort(space.actions.begin(), space.actions.end());
  return space;
}

double circuit_error_sum(std::span<const GateInstruction> circuit, const Architecture& arch) {
  double sum = 0.0;
  for (const auto& instr : circuit) {
    if (!arch.allows(instr, arch.n_physical_qubits)) {
      throw std::invalid_argument("instruction '" + to_string(instr) + "' is not legal on " + arch.name);
    }
    sum += arch.errors.error_of(instr);
  }
  return sum;
}

}  // namespace pssynth
