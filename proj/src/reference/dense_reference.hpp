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

// Serial reference simulator. Builds the full 2^n x 2^n operator of each gate
// from Kronecker products of 2x2 factors and multiplies it into the state.
// O(4^n) per gate; kept only as an oracle for the kernels and the
// environment, and as the baseline in the benchmarks.

#pragma once

#include <span>
#include <vector>

#include "pssynth/qcore.hpp"

namespace pssynth::reference {

using DenseMatrix = std::vector<Amplitude>;  // row-major, dim x dim

/// I (x) ... (x) U (x) ... (x) I for single-qubit gates, and
/// |0><0|_c (x) I + |1><1|_c (x) X_t for CNOT, little-endian.
DenseMatrix gate_operator(int n_qubits, const GateInstruction& instr);

std::vector<Amplitude> apply(std::span<const Amplitude> state, int n_qubits, const GateInstruction& instr);

/// Folds the circuit over |0...0>.
std::vector<Amplitude> fold(std::span<const GateInstruction> circuit, int n_qubits);

/// |sum conj(a_i) b_i|^2, straight loop.
double fidelity(std::span<const Amplitude> a, std::span<const Amplitude> b);

/// (|0...0> + |1...1>)/sqrt(2) written out by hand.
std::vector<Amplitude> cat_state(int n_qubits);

}  // namespace pssynth::reference
