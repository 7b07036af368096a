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

#include "pssynth/qcore.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pssynth {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

kernels::Matrix2 single_qubit_matrix(GateKind kind) {
  using C = Amplitude;
  switch (kind) {
    case GateKind::H:
      return {C{kInvSqrt2, 0}, C{kInvSqrt2, 0}, C{kInvSqrt2, 0}, C{-kInvSqrt2, 0}};
    case GateKind::X:
      return {C{0, 0}, C{1, 0}, C{1, 0}, C{0, 0}};
    case GateKind::Y:
      return {C{0, 0}, C{0, -1}, C{0, 1}, C{0, 0}};
    case GateKind::Z:
      return {C{1, 0}, C{0, 0}, C{0, 0}, C{-1, 0}};
    case GateKind::CNOT:
      break;
  }
  throw std::invalid_argument("CNOT is not a single-qubit gate");
}

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  const std::string n = lower(name);
  if (n == "h") return GateKind::H;
  if (n == "x") return GateKind::X;
  if (n == "y") return GateKind::Y;
  if (n == "z") return GateKind::Z;
  if (n == "cnot" || n == "cx") return GateKind::CNOT;
  return std::nullopt;
}

GateInstruction GateInstruction::single(GateKind kind, Qubit target) {
  if (kind == GateKind::CNOT) {
    throw std::invalid_argument("CNOT needs a control qubit");
  }
  return {kind, target, std::nullopt};
}

GateInstruction GateInstruction::cnot(Qubit control, Qubit target) {
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  return {GateKind::CNOT, target, control};
}

Qubit GateInstruction::max_qubit() const noexcept {
  return control ? std::max(*control, target) : target;
}

std::string to_string(const GateInstruction& instr) {
  std::string out = gate_name(instr.kind);
  if (instr.control) {
    out += ' ' + std::to_string(*instr.control);
  }
  out += ' ' + std::to_string(instr.target);
  return out;
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                " is not 2^" + std::to_string(n_qubits));
  }
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
  const double norm = kernels::norm_squared(amps_);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm^2 = " + std::to_string(norm) + ")");
  }
}

GateMatrix gate_matrix(GateKind kind) {
  if (kind == GateKind::CNOT) {
    GateMatrix m{4, std::vector<Amplitude>(16)};
    m.entries[0 * 4 + 0] = 1;
    m.entries[1 * 4 + 1] = 1;
    m.entries[2 * 4 + 3] = 1;
    m.entries[3 * 4 + 2] = 1;
    return m;
  }
  const auto u = single_qubit_matrix(kind);
  return GateMatrix{2, std::vector<Amplitude>(u.begin(), u.end())};
}

StateVector zero_state(int n_qubits) {
  check_qubit_count(n_qubits);
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  amps[0] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector apply_gate(const StateVector& state, const GateInstruction& instr) {
  const auto n = static_cast<Qubit>(state.n_qubits());
  if (instr.target >= n || (instr.control && *instr.control >= n)) {
    throw std::invalid_argument("instruction '" + to_string(instr) + "' out of range for " +
                                std::to_string(n) + " qubits");
  }
  if (instr.is_two_qubit() != instr.control.has_value()) {
    throw std::invalid_argument("control qubit must be present iff the gate is CNOT");
  }

  std::vector<Amplitude> amps = state.amps_;
  if (instr.kind == GateKind::CNOT) {
    if (*instr.control == instr.target) {
      throw std::invalid_argument("CNOT control and target must differ");
    }
    kernels::apply_cnot(amps, *instr.control, instr.target);
  } else {
    kernels::apply_single(amps, instr.target, single_qubit_matrix(instr.kind));
  }
  return StateVector(StateVector::Unchecked{}, state.n_qubits(), std::move(amps));
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("fidelity of states with different qubit counts");
  }
  return std::norm(kernels::inner_product(a.amplitudes(), b.amplitudes()));
}

TargetState TargetState::ghz(int n) {
  if (n < 3 || n > 5) {
    throw std::invalid_argument("GHZ target supports 3 to 5 qubits, got " + std::to_string(n));
  }
  return {Kind::Ghz, n};
}

std::string TargetState::name() const {
  return kind == Kind::Bell00 ? std::string("Bell00") : "GHZ" + std::to_string(n_qubits);
}

std::optional<TargetState> parse_target(std::string_view name) {
  const std::string n = lower(name);
  if (n == "bell" || n == "bell00") return TargetState::bell00();
  if (n.size() == 4 && n.starts_with("ghz") && n[3] >= '3' && n[3] <= '5') {
    return TargetState::ghz(n[3] - '0');
  }
  return std::nullopt;
}

StateVector target_state(TargetState target, int n_qubits) {
  if (n_qubits != target.n_qubits) {
    throw std::invalid_argument(target.name() + " needs " + std::to_string(target.n_qubits) +
                                " qubits, got " + std::to_string(n_qubits));
  }
  // Both targets are (|0...0> + |1...1>)/sqrt(2).
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  amps.front() = kInvSqrt2;
  amps.back() = kInvSqrt2;
  return StateVector(n_qubits, std::move(amps));
}

}  // namespace pssynth
