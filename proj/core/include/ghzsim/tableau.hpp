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
#include <optional>
#include <string>
#include <vector>

#include "ghzsim/clifford_map.hpp"
#include "ghzsim/pauli_string.hpp"

namespace ghzsim {

/// Generators of a stabilizer group, with signs.
class StabilizerTableau {
 public:
  StabilizerTableau() = default;
  StabilizerTableau(int n, std::vector<PauliString> rows);

  int qubits() const { return n_; }
  const std::vector<PauliString>& rows() const { return rows_; }

  /// Hermitian, pairwise commuting, independent, and no row equal to -I.
  bool is_valid() const;
  int rank() const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<PauliString> rows_;
};

/// Reusable row reduction of a tableau for repeated membership queries.
class GroupSolver {
 public:
  explicit GroupSolver(const StabilizerTableau& tableau);

  /// +1 or -1 if that multiple of `p` lies in the group generated by the
  /// tableau rows, std::nullopt if neither does.
  std::optional<int> sign_of(const PauliString& p) const;
  bool in_span(const PauliString& p) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    std::uint64_t x;
    std::uint64_t z;
    std::uint64_t combo;  // generators whose product this row is
  };
  std::optional<std::uint64_t> solve(const PauliString& p) const;
  bool bit(const Row& r, int pos) const;

  int n_;
  std::vector<PauliString> generators_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

/// Every generator replaced by its image under the map, signs tracked.
StabilizerTableau conjugate(const StabilizerTableau& tableau, const CliffordMap& clifford);

/// One-shot GroupSolver queries.
std::optional<int> sign_in_group(const StabilizerTableau& tableau, const PauliString& p);

/// Whether +/-p lies in the group, ignoring signs.
bool in_span(const StabilizerTableau& tableau, const PauliString& p);

/// Equality of the generated groups, with or without signs.
bool same_group(const StabilizerTableau& a, const StabilizerTableau& b);
bool same_group_phaseless(const StabilizerTableau& a, const StabilizerTableau& b);

}  // namespace ghzsim
