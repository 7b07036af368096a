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

// In-place state-vector kernels over raw amplitude spans.
//
// Layout is little-endian: qubit q is bit q of the basis index. The spans
// must have power-of-two length; callers validate qubit indices. Loops run
// under OpenMP once the state is large enough for threading to pay off
// (see kParallelMinPairs); below that they run on the calling thread.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace pssynth {

using Amplitude = std::complex<double>;

namespace kernels {

/// Row-major 2x2 single-qubit operator.
using Matrix2 = std::array<Amplitude, 4>;

/// Minimum number of independent amplitude pairs before a loop is split
/// across threads.
inline constexpr std::size_t kParallelMinPairs = std::size_t{1} << 14;

void apply_single(std::span<Amplitude> amps, unsigned target, const Matrix2& u);

/// Swaps the target bit of every basis state whose control bit is set.
void apply_cnot(std::span<Amplitude> amps, unsigned control, unsigned target);

/// <a|b>, conjugating the first argument.
Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b);

double norm_squared(std::span<const Amplitude> amps);

}  // namespace kernels
}  // namespace pssynth
