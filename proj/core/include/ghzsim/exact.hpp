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

#include <cstddef>

#include "ghzsim/circuit.hpp"
#include "ghzsim/simulator.hpp"

namespace ghzsim {

struct ExactOptions {
  /// Largest probability vector (2^(n R) entries) the oracle will allocate.
  std::size_t max_states = std::size_t{1} << 22;
};

/// Propagates the exact distribution over register bitstrings: gates
/// permute it, noise mixes it one qubit channel at a time, measurements
/// weight it by their success probability and marginalize the slot.
/// Returns an Estimate with zero standard errors and samples = 0.
/// Throws std::length_error when 2^(n R) exceeds options.max_states.
Estimate exact_diagonal_oracle(const Circuit& circuit, const CircuitConfig& config,
                               const ExactOptions& options = {});

/// Whether the oracle accepts this register size.
bool exact_feasible(const CircuitConfig& config, const ExactOptions& options = {});

}  // namespace ghzsim
