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
#include <string>
#include <variant>
#include <vector>

#include "ghzsim/gates.hpp"
#include "ghzsim/measurement.hpp"
#include "ghzsim/noise.hpp"
#include "ghzsim/phase_bits.hpp"

namespace ghzsim {

/// Register and noise parameters of a distillation run.
///
/// Slots 0..R-1 hold copies. The run starts with min(N, R) raw copies in
/// the lowest slots; further raw copies arrive through Refill elements.
struct CircuitConfig {
  int N = 2;  ///< raw copies consumed
  int n = 3;  ///< qubits per copy
  int K = 1;  ///< copies left at the end
  int R = 2;  ///< register slots per node
  NoiseModel noise;
  double f_in = 1.0;

  int initial_fill() const { return N < R ? N : R; }
  /// Throws std::invalid_argument when the parameters are inconsistent.
  void validate() const;
};

struct HApply {
  HKind kind = HKind::Identity;
  int a = 0;
  int b = 1;
  friend bool operator==(const HApply&, const HApply&) = default;
};

struct BApply {
  BGate gate;
  int a = 0;
  int b = 1;
  friend bool operator==(const BApply&, const BApply&) = default;
};

struct PauliOp {
  int copy = 0;
  int qubit = 1;
  Pauli pauli = Pauli::I;
  friend bool operator==(const PauliOp&, const PauliOp&) = default;
};

struct Measure {
  int copy = 0;
  Basis basis = Basis::Z;
  friend bool operator==(const Measure&, const Measure&) = default;
};

struct Refill {
  int slot = 0;
  friend bool operator==(const Refill&, const Refill&) = default;
};

/// Isotropic resampling of a live copy's error pattern.
struct Twirl {
  int copy = 0;
  friend bool operator==(const Twirl&, const Twirl&) = default;
};

using Element = std::variant<HApply, BApply, PauliOp, Measure, Refill, Twirl>;

struct Circuit {
  std::vector<Element> elements;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

std::string to_string(const Element& element);

struct Violation {
  std::size_t index;  ///< element index, or elements.size() for end-of-run rules
  std::string rule;
  std::string message;
};

/// Dry-runs the circuit against the register; empty means valid.
std::vector<Violation> validate(const Circuit& circuit, const CircuitConfig& config);

/// Throws std::invalid_argument listing every violation.
void require_valid(const Circuit& circuit, const CircuitConfig& config);

}  // namespace ghzsim
