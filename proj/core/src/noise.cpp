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

#include "ghzsim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzsim {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

constexpr std::array<Pauli, 3> kErrors = {Pauli::X, Pauli::Y, Pauli::Z};

std::uint32_t uniform_below(std::uint32_t bound, Rng& rng) {
  const auto v = static_cast<std::uint32_t>(uniform01(rng) * bound);
  return std::min(v, bound - 1);
}

Pauli draw_pauli(const std::array<double, 4>& probs, Rng& rng) {
  const double u = uniform01(rng);
  double acc = probs[0];
  if (u < acc) return Pauli::I;
  for (std::size_t k = 1; k < 4; ++k) {
    acc += probs[k];
    if (u < acc) return static_cast<Pauli>(k);
  }
  return Pauli::I;
}

std::vector<double> convolve_qubit(const std::vector<double>& dist, std::uint32_t shift, int qubit,
                                   int n, const std::array<double, 4>& probs) {
  std::vector<double> out(dist.size(), 0.0);
  std::array<std::uint32_t, 4> masks{};
  for (std::size_t k = 1; k < 4; ++k) {
    masks[k] = pauli_flip_mask(static_cast<Pauli>(k), qubit, n).value() << shift;
  }
  for (std::uint32_t m = 0; m < dist.size(); ++m) {
    if (dist[m] == 0.0) continue;
    for (std::size_t k = 0; k < 4; ++k) {
      if (probs[k] != 0.0) out[m ^ masks[k]] += dist[m] * probs[k];
    }
  }
  return out;
}

}  // namespace

void NoiseModel::validate() const {
  check_probability(p_gate, "p_gate");
  check_probability(eta, "eta");
  if (bias) {
    if (bias->px < 0 || bias->py < 0 || bias->pz < 0) {
      throw std::invalid_argument("bias components must be non-negative");
    }
    if (bias->px + bias->py + bias->pz > 1.0 + 1e-12) {
      throw std::invalid_argument("bias components must sum to at most 1");
    }
  }
}

std::array<double, 4> NoiseModel::pauli_probabilities() const {
  if (bias) {
    return {1.0 - bias->px - bias->py - bias->pz, bias->px, bias->py, bias->pz};
  }
  const double q = p_gate / 4.0;
  return {1.0 - 3.0 * q, q, q, q};
}

std::vector<QubitRef> touched_qubits(const GateDescriptor& gate, int n, int copy_a, int copy_b) {
  std::vector<QubitRef> out;
  if (is_trivial(gate)) return out;
  if (std::holds_alternative<HGate>(gate)) {
    for (int q = 1; q <= n; ++q) {
      out.push_back({copy_a, q});
      out.push_back({copy_b, q});
    }
  } else {
    const auto& b = std::get<BGate>(gate);
    for (int q : {b.node_i, b.node_j}) {
      out.push_back({copy_a, q});
      out.push_back({copy_b, q});
    }
  }
  return out;
}

void apply_gate_noise(SystemState& state, std::span<const QubitRef> touched,
                      const NoiseModel& model, Rng& rng) {
  const auto probs = model.pauli_probabilities();
  if (probs[0] >= 1.0 || touched.empty()) return;
  auto hit = [&](const QubitRef& ref) {
    const Pauli p = draw_pauli(probs, rng);
    if (p != Pauli::I) apply_pauli(state, ref.slot, ref.qubit, p);
  };
  if (model.locality == NoiseLocality::AllTouched || touched.size() < 2) {
    for (const auto& ref : touched) hit(ref);
    return;
  }
  const auto m = static_cast<std::uint32_t>(touched.size());
  const std::uint32_t i = uniform_below(m, rng);
  std::uint32_t j = uniform_below(m - 1, rng);
  if (j >= i) ++j;
  hit(touched[i]);
  hit(touched[j]);
}

std::vector<double> pair_mask_distribution(const GateDescriptor& gate, int n,
                                           const NoiseModel& model) {
  const std::size_t size = std::size_t{1} << (2 * n);
  std::vector<double> delta(size, 0.0);
  delta[0] = 1.0;
  const auto touched = touched_qubits(gate, n, 0, 1);
  const auto probs = model.pauli_probabilities();
  if (touched.empty() || probs[0] >= 1.0) return delta;
  auto shift_of = [n](const QubitRef& r) { return r.slot == 0 ? static_cast<std::uint32_t>(n) : 0u; };

  if (model.locality == NoiseLocality::AllTouched) {
    std::vector<double> dist = delta;
    for (const auto& r : touched) dist = convolve_qubit(dist, shift_of(r), r.qubit, n, probs);
    return dist;
  }
  std::vector<double> total(size, 0.0);
  const std::size_t m = touched.size();
  const double weight = 2.0 / static_cast<double>(m * (m - 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto dist = convolve_qubit(delta, shift_of(touched[i]), touched[i].qubit, n, probs);
      dist = convolve_qubit(dist, shift_of(touched[j]), touched[j].qubit, n, probs);
      for (std::size_t k = 0; k < size; ++k) total[k] += weight * dist[k];
    }
  }
  return total;
}

PairNoiseSampler::PairNoiseSampler(const std::vector<double>& distribution) {
  if (distribution.empty()) throw std::invalid_argument("empty noise distribution");
  p_zero_ = distribution[0];
  double acc = p_zero_;
  for (std::uint32_t m = 1; m < distribution.size(); ++m) {
    if (distribution[m] <= 0.0) continue;
    acc += distribution[m];
    masks_.push_back(m);
    cdf_.push_back(acc);
  }
  if (std::abs(acc - 1.0) > 1e-9) throw std::invalid_argument("noise distribution not normalized");
  if (!cdf_.empty()) cdf_.back() = 1.0;
}

std::uint32_t PairNoiseSampler::sample(double u) const {
  if (u < p_zero_) return 0;
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), masks_.size() - 1);
  return masks_[idx];
}

std::uint32_t PairNoiseSampler::sample(Rng& rng) const {
  if (masks_.empty()) return 0;
  return sample(uniform01(rng));
}

PhaseBits sample_raw_state(double f_in, int n, Rng& rng) {
  check_probability(f_in, "f_in");
  if (uniform01(rng) < f_in) return PhaseBits::perfect(n);
  return PhaseBits(n, uniform_below(1u << n, rng));
}

std::vector<double> raw_state_distribution(double f_in, int n) {
  check_probability(f_in, "f_in");
  const double spread = (1.0 - f_in) / static_cast<double>(1u << n);
  std::vector<double> dist(std::size_t{1} << n, spread);
  dist[0] += f_in;
  return dist;
}

PhaseBits twirl(PhaseBits bits, Rng& rng) {
  if (bits.is_perfect()) return bits;
  const int n = bits.qubits();
  return PhaseBits(n, 1u + uniform_below((1u << n) - 1u, rng));
}

}  // namespace ghzsim
