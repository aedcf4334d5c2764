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

#include "ghzsim/exact.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzsim/permutation_table.hpp"
#include "overloaded.hpp"

namespace ghzsim {

using detail::Overloaded;

namespace {

class Distribution {
 public:
  Distribution(int n, int slots) : n_(n), slots_(slots), p_(std::size_t{1} << (n * slots), 0.0) {}

  std::size_t size() const { return p_.size(); }
  double& operator[](std::size_t i) { return p_[i]; }
  double operator[](std::size_t i) const { return p_[i]; }

  std::uint32_t get(std::size_t idx, int slot) const {
    return static_cast<std::uint32_t>((idx >> shift(slot)) & low());
  }
  std::size_t with(std::size_t idx, int slot, std::uint32_t v) const {
    return (idx & ~(low() << shift(slot))) | (static_cast<std::size_t>(v) << shift(slot));
  }
  std::size_t flip(int slot, std::uint32_t mask) const {
    return static_cast<std::size_t>(mask) << shift(slot);
  }

  Distribution zeros() const { return Distribution(n_, slots_); }
  void swap(Distribution& other) { p_.swap(other.p_); }

  double total() const {
    double t = 0;
    for (double v : p_) t += v;
    return t;
  }

 private:
  int shift(int slot) const { return slot * n_; }
  std::size_t low() const { return (std::size_t{1} << n_) - 1u; }

  int n_;
  int slots_;
  std::vector<double> p_;
};

void qubit_channel(Distribution& d, const QubitRef& ref, int n, const std::array<double, 4>& probs) {
  Distribution out = d.zeros();
  for (std::size_t k = 0; k < 4; ++k) {
    if (probs[k] == 0.0) continue;
    const std::size_t mask =
        k == 0 ? 0 : d.flip(ref.slot, pauli_flip_mask(static_cast<Pauli>(k), ref.qubit, n).value());
    for (std::size_t idx = 0; idx < d.size(); ++idx) {
      if (d[idx] != 0.0) out[idx ^ mask] += probs[k] * d[idx];
    }
  }
  d.swap(out);
}

double coincidence_probability(PhaseBits bits, Basis basis, double eta) {
  const int n = bits.qubits();
  double p = 0;
  for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
    if (!measurement_passes(bits, basis, flips)) continue;
    double w = 1;
    for (int q = 0; q < n; ++q) w *= ((flips >> q) & 1u) ? eta : 1.0 - eta;
    p += w;
  }
  return p;
}

}  // namespace

bool exact_feasible(const CircuitConfig& config, const ExactOptions& options) {
  const int bits = config.n * config.R;
  return bits < 63 && (std::size_t{1} << bits) <= options.max_states;
}

Estimate exact_diagonal_oracle(const Circuit& circuit, const CircuitConfig& config,
                               const ExactOptions& options) {
  require_valid(circuit, config);
  if (!exact_feasible(config, options)) {
    throw std::length_error("exact oracle state space 2^" + std::to_string(config.n * config.R) +
                            " exceeds the configured bound");
  }
  const int n = config.n;
  const std::uint32_t states = 1u << n;
  const auto raw = raw_state_distribution(config.f_in, n);
  const auto probs = config.noise.pauli_probabilities();

  Distribution d(n, config.R);
  d[0] = 1.0;
  std::vector<char> live(static_cast<std::size_t>(config.R), 0);

  auto refill = [&](int slot) {
    Distribution out = d.zeros();
    for (std::size_t idx = 0; idx < d.size(); ++idx) {
      if (d[idx] == 0.0) continue;
      for (std::uint32_t v = 0; v < states; ++v) out[d.with(idx, slot, v)] += d[idx] * raw[v];
    }
    d.swap(out);
    live[static_cast<std::size_t>(slot)] = 1;
  };
  for (int s = 0; s < config.initial_fill(); ++s) refill(s);

  std::vector<std::vector<double>> success(2, std::vector<double>(states));
  for (Basis basis : {Basis::Z, Basis::X}) {
    for (std::uint32_t v = 0; v < states; ++v) {
      success[static_cast<std::size_t>(basis)][v] =
          coincidence_probability(PhaseBits(n, v), basis, config.noise.eta);
    }
  }

  auto gate = [&](const GateDescriptor& g, int a, int b) {
    const auto table = build_permutation_table(g, n);
    Distribution out = d.zeros();
    for (std::size_t idx = 0; idx < d.size(); ++idx) {
      if (d[idx] == 0.0) continue;
      const std::uint32_t image = table[pair_index(d.get(idx, a), d.get(idx, b), n)];
      out[d.with(d.with(idx, a, image >> n), b, image & (states - 1u))] += d[idx];
    }
    d.swap(out);
    const auto touched = touched_qubits(g, n, a, b);
    if (touched.empty() || probs[0] >= 1.0) return;
    if (config.noise.locality == NoiseLocality::AllTouched) {
      for (const auto& ref : touched) qubit_channel(d, ref, n, probs);
      return;
    }
    Distribution mixed = d.zeros();
    const std::size_t m = touched.size();
    const double weight = 2.0 / static_cast<double>(m * (m - 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        Distribution branch = d;
        qubit_channel(branch, touched[i], n, probs);
        qubit_channel(branch, touched[j], n, probs);
        for (std::size_t idx = 0; idx < d.size(); ++idx) mixed[idx] += weight * branch[idx];
      }
    }
    d.swap(mixed);
  };

  for (const auto& element : circuit.elements) {
    std::visit(
        Overloaded{
            [&](const HApply& e) { gate(HGate{e.kind}, e.a, e.b); },
            [&](const BApply& e) { gate(e.gate, e.a, e.b); },
            [&](const PauliOp& e) {
              const std::size_t mask = d.flip(e.copy, pauli_flip_mask(e.pauli, e.qubit, n).value());
              Distribution out = d.zeros();
              for (std::size_t idx = 0; idx < d.size(); ++idx) out[idx ^ mask] = d[idx];
              d.swap(out);
            },
            [&](const Measure& e) {
              const auto& table = success[static_cast<std::size_t>(e.basis)];
              Distribution out = d.zeros();
              for (std::size_t idx = 0; idx < d.size(); ++idx) {
                if (d[idx] != 0.0) out[d.with(idx, e.copy, 0)] += d[idx] * table[d.get(idx, e.copy)];
              }
              d.swap(out);
              live[static_cast<std::size_t>(e.copy)] = 0;
            },
            [&](const Refill& e) { refill(e.slot); },
            [&](const Twirl& e) {
              Distribution out = d.zeros();
              for (std::size_t idx = 0; idx < d.size(); ++idx) {
                if (d[idx] == 0.0) continue;
                if (d.get(idx, e.copy) == 0) {
                  out[idx] += d[idx];
                  continue;
                }
                const double share = d[idx] / static_cast<double>(states - 1u);
                for (std::uint32_t v = 1; v < states; ++v) out[d.with(idx, e.copy, v)] += share;
              }
              d.swap(out);
            },
        },
        element);
  }

  Estimate result;
  const double accepted = d.total();
  result.p_succ = accepted;
  if (accepted <= 0.0) {
    result.f_out = result.f_out_joint = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  double perfect = 0, joint = 0;
  for (std::size_t idx = 0; idx < d.size(); ++idx) {
    if (d[idx] == 0.0) continue;
    int good = 0;
    for (int s = 0; s < config.R; ++s) {
      if (live[static_cast<std::size_t>(s)] && d.get(idx, s) == 0) ++good;
    }
    perfect += d[idx] * good;
    if (good == config.K) joint += d[idx];
  }
  result.f_out = perfect / (accepted * config.K);
  result.f_out_joint = joint / accepted;
  return result;
}

}  // namespace ghzsim
