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

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "ghzsim/circuit.hpp"
#include "ghzsim/noise.hpp"
#include "ghzsim/permutation_table.hpp"

namespace ghzsim {

struct TrajectoryResult {
  bool accepted = false;
  bool output_perfect = false;
  std::vector<bool> per_copy_perfect;
};

/// Integer counts behind an Estimate; sums are order-independent.
struct Tally {
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::uint64_t perfect_copies = 0;  ///< perfect survivors over accepted runs
  std::uint64_t joint_perfect = 0;   ///< accepted runs with every survivor perfect

  void add(const TrajectoryResult& r);
  Tally& operator+=(const Tally& other);
  friend bool operator==(const Tally&, const Tally&) = default;
};

/// f_out is the per-copy perfect fraction among accepted runs, f_out_joint
/// the probability that all K survivors are perfect. Both are NaN when no
/// run is accepted. Standard errors are binomial; exact results carry 0.
struct Estimate {
  double f_out = 0;
  double f_out_se = 0;
  double p_succ = 0;
  double p_succ_se = 0;
  double f_out_joint = 0;
  double f_out_joint_se = 0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;

  static Estimate from_tally(const Tally& tally, int K);
  bool f_out_defined() const { return !std::isnan(f_out); }
};

/// One gate compiled to a table lookup plus a sampled noise mask.
class GateKernel {
 public:
  GateKernel(const GateDescriptor& gate, int n, const NoiseModel& model, TableCache& cache);

  void apply(std::uint32_t& a, std::uint32_t& b, Rng& rng) const {
    std::uint32_t image = (*table_)[(a << n_) | b];
    if (!noise_.noiseless()) image ^= noise_.sample(rng);
    a = image >> n_;
    b = image & low_mask_;
  }

  const PermutationTable& table() const { return *table_; }

 private:
  std::shared_ptr<const PermutationTable> table_;
  PairNoiseSampler noise_;
  int n_;
  std::uint32_t low_mask_;
};

/// Reference trajectory: SystemState, per-qubit noise sampling and sampled
/// measurement outcomes. Validates the circuit first.
TrajectoryResult run_trajectory(const Circuit& circuit, const CircuitConfig& config, Rng& rng);

inline constexpr std::uint64_t kChunkSize = 4096;

/// Generator of trajectory chunk `chunk` under `seed`.
Rng chunk_rng(std::uint64_t seed, std::uint64_t chunk);

/// Circuit compiled to tables, noise samplers and success tables.
class Simulator {
 public:
  Simulator(const Circuit& circuit, const CircuitConfig& config,
            TableCache& cache = default_table_cache());

  const CircuitConfig& config() const { return config_; }

  TrajectoryResult run(Rng& rng) const;
  /// Counts `count` trajectories drawn from chunk_rng(seed, chunk).
  Tally run_chunk(std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) const;

 private:
  enum class OpKind : std::uint8_t { Gate, Flip, Measure, Refill, Twirl };
  struct Op {
    OpKind kind;
    int a;
    int b;
    std::uint32_t mask;  // Flip mask, or index of the kernel / success table
  };

  // Runs one trajectory; returns false on rejection, leaving `bits` final.
  bool step_all(std::vector<std::uint32_t>& bits, Rng& rng) const;
  std::uint32_t raw(Rng& rng) const;

  CircuitConfig config_;
  std::vector<Op> ops_;
  std::vector<GateKernel> kernels_;
  std::vector<std::vector<double>> success_;  // indexed by Basis
  std::vector<int> outputs_;                  // slots alive at the end
};

/// Monte Carlo estimate over `samples` trajectories, split into chunks of
/// kChunkSize with independently seeded generators; the result does not
/// depend on `threads` (0 = all hardware threads).
Estimate estimate(const Simulator& simulator, std::uint64_t samples, std::uint64_t seed,
                  int threads = 0);
Estimate estimate(const Circuit& circuit, const CircuitConfig& config, std::uint64_t samples,
                  std::uint64_t seed, int threads = 0);

}  // namespace ghzsim
