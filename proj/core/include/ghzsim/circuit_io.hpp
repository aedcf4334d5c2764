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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ghzsim/circuit.hpp"

namespace ghzsim {

inline constexpr int kCircuitFileVersion = 1;

/// Raised for malformed circuit documents; `element()` names the offending
/// entry of the elements array when there is one.
class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(const std::string& message, std::optional<std::size_t> element = std::nullopt);
  std::optional<std::size_t> element() const { return element_; }

 private:
  std::optional<std::size_t> element_;
};

/// JSON circuit document: {"version", "n", "N", "K", "R", "elements": [...]}.
/// Elements are objects tagged by "kind":
///   {"kind": "H", "gate": "CNOT12", "a": 0, "b": 1}
///   {"kind": "B", "gate": "CZ.SI", "nodes": [1, 3], "a": 0, "b": 1}
///   {"kind": "Pauli", "copy": 0, "qubit": 2, "pauli": "X"}
///   {"kind": "Measure", "copy": 1, "basis": "Z"}
///   {"kind": "Refill", "slot": 1}
///   {"kind": "Twirl", "copy": 0}
struct CircuitFile {
  Circuit circuit;
  int n = 0;
  int N = 0;
  int K = 0;
  int R = 0;

  /// Copies n, N, K, R into `config`, keeping its noise and f_in.
  void apply_shape(CircuitConfig& config) const;
};

CircuitFile parse_circuit(std::string_view json_text);
std::string serialize_circuit(const Circuit& circuit, const CircuitConfig& config);

CircuitFile load_circuit_file(const std::filesystem::path& path);
void save_circuit_file(const std::filesystem::path& path, const Circuit& circuit,
                       const CircuitConfig& config);

}  // namespace ghzsim
