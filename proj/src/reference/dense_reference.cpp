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

#include "reference/dense_reference.hpp"

#include <cmath>
#include <stdexcept>

namespace pssynth::reference {
namespace {

using Small = std::vector<Amplitude>;  // 2x2 row-major

DenseMatrix kron(const DenseMatrix& a, std::size_t da, const Small& b, std::size_t db) {
  const std::size_t d = da * db;
  DenseMatrix out(d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out[(i * db + k) * d + (j * db + l)] = a[i * da + j] * b[k * db + l];
  return out;
}

// Tensor product with the highest qubit leftmost, so qubit 0 ends up as the
// least significant index bit.
DenseMatrix tensor(int n_qubits, const std::vector<Small>& factors_by_qubit) {
  DenseMatrix acc{Amplitude{1.0}};
  std::size_t dim = 1;
  for (int q = n_qubits - 1; q >= 0; --q) {
    acc = kron(acc, dim, factors_by_qubit[static_cast<std::size_t>(q)], 2);
    dim *= 2;
  }
  return acc;
}

Small pauli_or_h(GateKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  const Amplitude i{0.0, 1.0};
  switch (kind) {
    case GateKind::H: return {s, s, s, -s};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -i, i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::CNOT: break;
  }
  throw std::invalid_argument("not a single-qubit gate");
}

const Small kIdentity{1.0, 0.0, 0.0, 1.0};
const Small kProj0{1.0, 0.0, 0.0, 0.0};
const Small kProj1{0.0, 0.0, 0.0, 1.0};
const Small kNot{0.0, 1.0, 1.0, 0.0};

}  // namespace

DenseMatrix gate_operator(int n_qubits, const GateInstruction& instr) {
  const auto n = static_cast<std::size_t>(n_qubits);
  if (instr.kind != GateKind::CNOT) {
    std::vector<Small> factors(n, kIdentity);
    factors.at(instr.target) = pauli_or_h(instr.kind);
    return tensor(n_qubits, factors);
  }
  std::vector<Small> off(n, kIdentity);
  std::vector<Small> on(n, kIdentity);
  off.at(*instr.control) = kProj0;
  on.at(*instr.control) = kProj1;
  on.at(instr.target) = kNot;
  DenseMatrix a = tensor(n_qubits, off);
  const DenseMatrix b = tensor(n_qubits, on);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

std::vector<Amplitude> apply(std::span<const Amplitude> state, int n_qubits, const GateInstruction& instr) {
  const DenseMatrix u = gate_operator(n_qubits, instr);
  const std::size_t d = state.size();
  std::vector<Amplitude> out(d);
  for (std::size_t r = 0; r < d; ++r) {
    Amplitude acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) acc += u[r * d + c] * state[c];
    out[r] = acc;
  }
  return out;
}

std::vector<Amplitude> fold(std::span<const GateInstruction> circuit, int n_qubits) {
  std::vector<Amplitude> state(std::size_t{1} << n_qubits);
  state[0] = 1.0;
  for (const auto& instr : circuit) state = apply(state, n_qubits, instr);
  return state;
}

double fidelity(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  Amplitude acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return std::norm(acc);
}

std::vector<Amplitude> cat_state(int n_qubits) {
  std::vector<Amplitude> s(std::size_t{1} << n_qubits);
  s.front() = 1.0 / std::sqrt(2.0);
  s.back() = 1.0 / std::sqrt(2.0);
  return s;
}

}  // namespace pssynth::reference
