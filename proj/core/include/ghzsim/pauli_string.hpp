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

#include "ghzsim/phase_bits.hpp"

namespace ghzsim {

/// Maximum qubit count of the stabilizer oracle.
inline constexpr int kMaxOracleQubits = 64;

/// An n-qubit Pauli operator i^phase * P_1 (x) ... (x) P_n where P_k is
/// labelled by (x_k, z_k): (1,0) = X, (0,1) = Z, (1,1) = Y. Hermitian
/// strings have an even phase; phase 2 is a minus sign.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int phase = 0;
  int qubits = 0;

  static PauliString identity(int n) { return PauliString{0, 0, 0, n}; }
  static PauliString single(int n, int qubit, Pauli p);
  /// Parses "+XZZ", "-IYY", "XX" (qubit 0 is the leftmost letter).
  static PauliString parse(std::string_view text);

  Pauli at(int qubit) const;
  bool is_hermitian() const { return (phase & 1) == 0; }
  /// +1 or -1 for Hermitian strings.
  int sign() const;
  PauliString unsigned_part() const { return PauliString{x, z, 0, qubits}; }
  bool same_operator(const PauliString& other) const { return x == other.x && z == other.z; }

  bool commutes_with(const PauliString& other) const;

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Operator product a * b with exact phase.
PauliString operator*(const PauliString& a, const PauliString& b);

}  // namespace ghzsim
