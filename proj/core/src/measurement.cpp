// Copyright 2026 The ghzsim Authors
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

#include "ghzsim/measurement.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzsim {

char to_char(Basis basis) { return basis == Basis::Z ? 'Z' : 'X'; }

Basis parse_basis(std::string_view text) {
  if (text == "Z" || text == "z") return Basis::Z;
  if (text == "X" || text == "x") return Basis::X;
  throw std::invalid_argument("unknown measurement basis '" + std::string(text) + "'");
}

bool measurement_passes(PhaseBits bits, Basis basis, std::uint32_t flips) {
  const int n = bits.qubits();
  if (basis == Basis::X) {
    return (static_cast<unsigned>(bits.x_bit()) ^ (std::popcount(flips) & 1u)) == 0;
  }
  // z_q compares the outcomes of nodes q and q+1.
  const std::uint32_t adjacent = (flips ^ (flips >> 1)) & ((1u << (n - 1)) - 1u);
  return bits.z_bits() == adjacent;
}

bool measure_copy(SystemState& state, int slot, Basis basis, const NoiseModel& model, Rng& rng) {
  const PhaseBits bits = state.copy(slot);
  const int n = bits.qubits();
  std::uint32_t flips = 0;
  if (model.eta > 0.0) {
    for (int q = 1; q <= n; ++q) {
      if (uniform01(rng) < model.eta) flips |= 1u << (n - q);
    }
  }
  state.release(slot);
  return measurement_passes(bits, basis, flips);
}

std::vector<double> success_probabilities(int n, Basis basis, double eta) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0, 1]");
  const std::uint32_t states = 1u << n;
  std::vector<double> out(states, 0.0);
  for (std::uint32_t flips = 0; flips < states; ++flips) {
    const int w = std::popcount(flips);
    const double weight = std::pow(eta, w) * std::pow(1.0 - eta, n - w);
    if (weight == 0.0) continue;
    for (std::uint32_t s = 0; s < states; ++s) {
      if (measurement_passes(PhaseBits(n, s), basis, flips)) out[s] += weight;
    }
  }
  return out;
}

}  // namespace ghzsim
