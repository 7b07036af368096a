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

#include "pssynth/kernels.hpp"

#include <cstdint>
#include <utility>

namespace pssynth::kernels {
namespace {

// Inserts a zero bit at position `bit`, shifting the higher bits up.
inline std::size_t insert_zero_bit(std::size_t k, unsigned bit) {
  const std::size_t low = k & ((std::size_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

}  // namespace

void apply_single(std::span<Amplitude> amps, unsigned target, const Matrix2& u) {
  const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
  const std::size_t stride = std::size_t{1} << target;
  Amplitude* data = amps.data();

#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(pairs) >= kParallelMinPairs)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::size_t i = insert_zero_bit(static_cast<std::size_t>(k), target);
    const std::size_t j = i | stride;
    const Amplitude a0 = data[i];
    const Amplitude a1 = data[j];
    data[i] = u[0] * a0 + u[1] * a1;
    data[j] = u[2] * a0 + u[3] * a1;
  }
}

void apply_cnot(std::span<Amplitude> amps, unsigned control, unsigned target) {
  const auto quads = static_cast<std::int64_t>(amps.size() / 4);
  const unsigned lo = control < target ? control : target;
  const unsigned hi = control < target ? target : control;
  const std::size_t control_mask = std::size_t{1} << control;
  const std::size_t target_mask = std::size_t{1} << target;
  Amplitude* data = amps.data();

#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(quads) >= kParallelMinPairs)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::size_t base =
        insert_zero_bit(insert_zero_bit(static_cast<std::size_t>(k), lo), hi);
    const std::size_t i = base | control_mask;
    std::swap(data[i], data[i | target_mask]);
  }
}

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  const auto n = static_cast<std::int64_t>(a.size());
  double re = 0.0;
  double im = 0.0;

#pragma omp parallel for schedule(static) reduction(+ : re, im) \
    if (static_cast<std::size_t>(n) >= 2 * kParallelMinPairs)
  for (std::int64_t i = 0; i < n; ++i) {
    const Amplitude term = std::conj(a[i]) * b[i];
    re += term.real();
    im += term.imag();
  }
  return {re, im};
}

double norm_squared(std::span<const Amplitude> amps) {
  const auto n = static_cast<std::int64_t>(amps.size());
  double sum = 0.0;

#pragma omp parallel for schedule(static) reduction(+ : sum) \
    if (static_cast<std::size_t>(n) >= 2 * kParallelMinPairs)
  for (std::int64_t i = 0; i < n; ++i) {
    sum += std::norm(amps[i]);
  }
  return sum;
}

}  // namespace pssynth::kernels
