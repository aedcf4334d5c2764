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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ghzsim/gates.hpp"
#include "ghzsim/phase_bits.hpp"

namespace ghzsim {

/// Which of a gate's qubits receive the depolarizing channel.
enum class NoiseLocality : std::uint8_t {
  AllTouched,  ///< every qubit the gate touches
  TwoRandom,   ///< a uniformly chosen pair of touched qubits
};

struct PauliBias {
  double px = 0;
  double py = 0;
  double pz = 0;
};

struct NoiseModel {
  double p_gate = 0;
  double eta = 0;
  std::optional<PauliBias> bias;
  NoiseLocality locality = NoiseLocality::AllTouched;

  /// Throws std::invalid_argument on out-of-range probabilities.
  void validate() const;
  /// Probabilities of I, X, Y, Z on one touched qubit.
  std::array<double, 4> pauli_probabilities() const;
};

/// One qubit of one register slot; `qubit` is the 1-based node index.
struct QubitRef {
  int slot;
  int qubit;
};

/// Qubits touched by a gate on copies (a, b): all 2n for an H gate, the four
/// at the two nodes for a B gate, none for the identity of either group.
std::vector<QubitRef> touched_qubits(const GateDescriptor& gate, int n, int copy_a, int copy_b);

/// Reference sampler: draws an independent Pauli for each touched qubit
/// (or for a random pair of them) and applies it.
void apply_gate_noise(SystemState& state, std::span<const QubitRef> touched,
                      const NoiseModel& model, Rng& rng);

/// Distribution of the XOR mask a gate's noise applies to the 2n-bit pair
/// state of its two copies. Copy_a is the high half, as in pair_index.
std::vector<double> pair_mask_distribution(const GateDescriptor& gate, int n,
                                           const NoiseModel& model);

/// Samples a pair-state XOR mask with one uniform draw.
class PairNoiseSampler {
 public:
  PairNoiseSampler() = default;
  explicit PairNoiseSampler(const std::vector<double>& distribution);

  bool noiseless() const { return masks_.empty(); }
  std::uint32_t sample(Rng& rng) const;
  std::uint32_t sample(double u) const;

 private:
  double p_zero_ = 1.0;
  std::vector<double> cdf_;
  std::vector<std::uint32_t> masks_;
};

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Isotropic raw copy: perfect with probability f_in + (1 - f_in)/2^n and
/// otherwise uniform over the non-zero patterns.
PhaseBits sample_raw_state(double f_in, int n, Rng& rng);

/// Probability of each of the 2^n patterns under the raw-state mixture.
std::vector<double> raw_state_distribution(double f_in, int n);

/// Keeps the perfect pattern and resamples any other pattern uniformly over
/// the non-zero ones.
PhaseBits twirl(PhaseBits bits, Rng& rng);

}  // namespace ghzsim
