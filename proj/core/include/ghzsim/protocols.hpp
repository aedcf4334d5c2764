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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghzsim/circuit.hpp"
#include "ghzsim/simulator.hpp"

namespace ghzsim {

/// A baseline protocol realized as a circuit together with its register.
struct ProtocolCircuit {
  std::string name;
  Circuit circuit;
  CircuitConfig config;
};

/// Noise, fidelity and size shared by every baseline.
struct BaselineParams {
  int n = 3;
  NoiseModel noise;
  double f_in = 0.9;
};

struct PumpingConfig {
  int rounds = 1;
};

struct NestedConfig {
  int levels = 1;
  bool twirl_between_rounds = true;
};

struct SequenceConfig {
  std::vector<Basis> bases;
  /// Parses strings such as "ZZX".
  static SequenceConfig parse(std::string_view bases);
  std::string to_string() const;
};

/// CNOT12 from the stored copy (control) onto the raw copy, then a Z-basis
/// measurement of the raw copy.
Circuit pumping_round_circuit(int stored, int raw);

/// One stored copy pumped by `rounds` fresh copies: N = rounds + 1, R = 2.
ProtocolCircuit pumping(const PumpingConfig& config, const BaselineParams& params);

/// Binary tree over 2^levels raw copies, depth-first in levels + 1 slots.
/// Survivors of every level except the last are twirled when enabled.
ProtocolCircuit nested(const NestedConfig& config, const BaselineParams& params);

/// The nested tree without twirling, one basis per level. A Z round uses
/// CNOT12 from the kept copy onto the measured one; an X round uses CNOT21
/// so the measured copy is the control.
ProtocolCircuit sequence(const SequenceConfig& config, const BaselineParams& params);

Estimate run_pumping(const PumpingConfig& config, const BaselineParams& params,
                     std::uint64_t samples, std::uint64_t seed, int threads = 0);
Estimate run_nested(const NestedConfig& config, const BaselineParams& params,
                    std::uint64_t samples, std::uint64_t seed, int threads = 0);
Estimate run_sequence(const SequenceConfig& config, const BaselineParams& params,
                      std::uint64_t samples, std::uint64_t seed, int threads = 0);

}  // namespace ghzsim
