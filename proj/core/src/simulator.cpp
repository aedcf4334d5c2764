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

#include "ghzsim/simulator.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "ghzsim/parallel.hpp"
#include "overloaded.hpp"

namespace ghzsim {

using detail::Overloaded;

namespace {

double binomial_se(double p, std::uint64_t n) {
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

std::vector<int> surviving_slots(const Circuit& circuit, const CircuitConfig& config) {
  std::vector<char> live(static_cast<std::size_t>(config.R), 0);
  for (int s = 0; s < config.initial_fill(); ++s) live[static_cast<std::size_t>(s)] = 1;
  for (const auto& e : circuit.elements) {
    if (const auto* m = std::get_if<Measure>(&e)) live[static_cast<std::size_t>(m->copy)] = 0;
    if (const auto* r = std::get_if<Refill>(&e)) live[static_cast<std::size_t>(r->slot)] = 1;
  }
  std::vector<int> out;
  for (int s = 0; s < config.R; ++s) {
    if (live[static_cast<std::size_t>(s)]) out.push_back(s);
  }
  return out;
}

}  // namespace

void Tally::add(const TrajectoryResult& r) {
  ++samples;
  if (!r.accepted) return;
  ++accepted;
  for (bool p : r.per_copy_perfect) perfect_copies += p ? 1 : 0;
  joint_perfect += r.output_perfect ? 1 : 0;
}

Tally& Tally::operator+=(const Tally& other) {
  samples += other.samples;
  accepted += other.accepted;
  perfect_copies += other.perfect_copies;
  joint_perfect += other.joint_perfect;
  return *this;
}

Estimate Estimate::from_tally(const Tally& tally, int K) {
  Estimate e;
  e.samples = tally.samples;
  e.accepted = tally.accepted;
  e.p_succ = tally.samples ? static_cast<double>(tally.accepted) / static_cast<double>(tally.samples)
                           : std::numeric_limits<double>::quiet_NaN();
  e.p_succ_se = binomial_se(e.p_succ, tally.samples);
  if (tally.accepted == 0) {
    e.f_out = e.f_out_se = e.f_out_joint = e.f_out_joint_se =
        std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  const double accepted = static_cast<double>(tally.accepted);
  e.f_out = static_cast<double>(tally.perfect_copies) / (accepted * K);
  e.f_out_se = binomial_se(e.f_out, tally.accepted);
  e.f_out_joint = static_cast<double>(tally.joint_perfect) / accepted;
  e.f_out_joint_se = binomial_se(e.f_out_joint, tally.accepted);
  return e;
}

GateKernel::GateKernel(const GateDescriptor& gate, int n, const NoiseModel& model,
                       TableCache& cache)
    : table_(cache.get(gate, n)),
      noise_(pair_mask_distribution(gate, n, model)),
      n_(n),
      low_mask_((1u << n) - 1u) {}

TrajectoryResult run_trajectory(const Circuit& circuit, const CircuitConfig& config, Rng& rng) {
  require_valid(circuit, config);
  const int n = config.n;
  SystemState state(n, config.R);
  for (int s = 0; s < config.initial_fill(); ++s) state.load(s, sample_raw_state(config.f_in, n, rng));

  TrajectoryResult result;
  auto gate = [&](const GateDescriptor& g, int a, int b) {
    apply_gate(state, *default_table_cache().get(g, n), a, b);
    const auto touched = touched_qubits(g, n, a, b);
    apply_gate_noise(state, touched, config.noise, rng);
  };
  for (const auto& element : circuit.elements) {
    bool ok = true;
    std::visit(Overloaded{
                   [&](const HApply& e) { gate(HGate{e.kind}, e.a, e.b); },
                   [&](const BApply& e) { gate(e.gate, e.a, e.b); },
                   [&](const PauliOp& e) { apply_pauli(state, e.copy, e.qubit, e.pauli); },
                   [&](const Measure& e) {
                     ok = measure_copy(state, e.copy, e.basis, config.noise, rng);
                   },
                   [&](const Refill& e) {
                     state.load(e.slot, sample_raw_state(config.f_in, n, rng));
                   },
                   [&](const Twirl& e) { state.set(e.copy, twirl(state.copy(e.copy), rng)); },
               },
               element);
    if (!ok) return result;
  }
  result.accepted = true;
  result.output_perfect = true;
  for (int s = 0; s < config.R; ++s) {
    if (!state.live(s)) continue;
    const bool perfect = state.copy(s).is_perfect();
    result.per_copy_perfect.push_back(perfect);
    result.output_perfect = result.output_perfect && perfect;
  }
  return result;
}

Rng chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return Rng(seq);
}

Simulator::Simulator(const Circuit& circuit, const CircuitConfig& config, TableCache& cache)
    : config_(config) {
  require_valid(circuit, config);
  const int n = config.n;
  success_ = {success_probabilities(n, Basis::Z, config.noise.eta),
              success_probabilities(n, Basis::X, config.noise.eta)};
  auto add_gate = [&](const GateDescriptor& g, int a, int b) {
    kernels_.emplace_back(g, n, config.noise, cache);
    ops_.push_back({OpKind::Gate, a, b, static_cast<std::uint32_t>(kernels_.size() - 1)});
  };
  for (const auto& element : circuit.elements) {
    std::visit(Overloaded{
                   [&](const HApply& e) { add_gate(HGate{e.kind}, e.a, e.b); },
                   [&](const BApply& e) { add_gate(e.gate, e.a, e.b); },
                   [&](const PauliOp& e) {
                     ops_.push_back({OpKind::Flip, e.copy, 0,
                                     pauli_flip_mask(e.pauli, e.qubit, n).value()});
                   },
                   [&](const Measure& e) {
                     ops_.push_back({OpKind::Measure, e.copy, 0,
                                     static_cast<std::uint32_t>(e.basis)});
                   },
                   [&](const Refill& e) { ops_.push_back({OpKind::Refill, e.slot, 0, 0}); },
                   [&](const Twirl& e) { ops_.push_back({OpKind::Twirl, e.copy, 0, 0}); },
               },
               element);
  }
  outputs_ = surviving_slots(circuit, config);
}

std::uint32_t Simulator::raw(Rng& rng) const {
  if (uniform01(rng) < config_.f_in) return 0;
  const std::uint32_t states = 1u << config_.n;
  const auto v = static_cast<std::uint32_t>(uniform01(rng) * states);
  return v < states ? v : states - 1;
}

bool Simulator::step_all(std::vector<std::uint32_t>& bits, Rng& rng) const {
  for (int s = 0; s < config_.initial_fill(); ++s) bits[static_cast<std::size_t>(s)] = raw(rng);
  const std::uint32_t nonzero = (1u << config_.n) - 1u;
  for (const Op& op : ops_) {
    auto& a = bits[static_cast<std::size_t>(op.a)];
    switch (op.kind) {
      case OpKind::Gate:
        kernels_[op.mask].apply(a, bits[static_cast<std::size_t>(op.b)], rng);
        break;
      case OpKind::Flip:
        a ^= op.mask;
        break;
      case OpKind::Measure: {
        const double p = success_[op.mask][a];
        if (p <= 0.0) return false;
        if (p < 1.0 && uniform01(rng) >= p) return false;
        a = 0;
        break;
      }
      case OpKind::Refill:
        a = raw(rng);
        break;
      case OpKind::Twirl:
        if (a != 0) {
          const auto v = static_cast<std::uint32_t>(uniform01(rng) * nonzero);
          a = 1u + (v < nonzero ? v : nonzero - 1);
        }
        break;
    }
  }
  return true;
}

TrajectoryResult Simulator::run(Rng& rng) const {
  std::vector<std::uint32_t> bits(static_cast<std::size_t>(config_.R), 0);
  TrajectoryResult result;
  if (!step_all(bits, rng)) return result;
  result.accepted = true;
  result.output_perfect = true;
  for (int s : outputs_) {
    const bool perfect = bits[static_cast<std::size_t>(s)] == 0;
    result.per_copy_perfect.push_back(perfect);
    result.output_perfect = result.output_perfect && perfect;
  }
  return result;
}

Tally Simulator::run_chunk(std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) const {
  Rng rng = chunk_rng(seed, chunk);
  std::vector<std::uint32_t> bits(static_cast<std::size_t>(config_.R), 0);
  Tally tally;
  for (std::uint64_t t = 0; t < count; ++t) {
    ++tally.samples;
    if (!step_all(bits, rng)) continue;
    ++tally.accepted;
    std::uint64_t perfect = 0;
    for (int s : outputs_) perfect += bits[static_cast<std::size_t>(s)] == 0 ? 1 : 0;
    tally.perfect_copies += perfect;
    tally.joint_perfect += perfect == outputs_.size() ? 1 : 0;
  }
  return tally;
}

Estimate estimate(const Simulator& simulator, std::uint64_t samples, std::uint64_t seed,
                  int threads) {
  if (samples == 0) throw std::invalid_argument("estimate needs at least one sample");
  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<Tally> tallies(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t count = std::min(kChunkSize, samples - begin);
    tallies[c] = simulator.run_chunk(seed, c, count);
  });
  Tally total;
  for (const auto& t : tallies) total += t;
  return Estimate::from_tally(total, simulator.config().K);
}

Estimate estimate(const Circuit& circuit, const CircuitConfig& config, std::uint64_t samples,
                  std::uint64_t seed, int threads) {
  return estimate(Simulator(circuit, config), samples, seed, threads);
}

}  // namespace ghzsim
