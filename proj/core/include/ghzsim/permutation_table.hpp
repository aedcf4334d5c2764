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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "ghzsim/gates.hpp"
#include "ghzsim/phase_bits.hpp"

namespace ghzsim {

/// Pair-state index of two copies: copy_a in the high n bits.
inline std::uint32_t pair_index(std::uint32_t a, std::uint32_t b, int n) { return (a << n) | b; }

/// A bijection on the 4^n pair states of two n-qubit copies that realizes
/// one phaseless GHZ-preserving gate.
class PermutationTable {
 public:
  /// Throws std::invalid_argument unless `entries` is a bijection of the
  /// right size that fixes the all-plus pair state.
  PermutationTable(GateDescriptor gate, int n, std::vector<std::uint32_t> entries);

  const GateDescriptor& gate() const { return gate_; }
  int qubits() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  std::uint32_t operator[](std::uint32_t k) const { return entries_[k]; }
  const std::vector<std::uint32_t>& entries() const { return entries_; }
  bool is_identity() const;

 private:
  GateDescriptor gate_;
  int n_;
  std::vector<std::uint32_t> entries_;
};

/// Builds the table from the gate's action on the stabilizer generators.
PermutationTable build_permutation_table(const GateDescriptor& gate, int n);

/// Entries of "apply `first`, then `second`": k -> second[first[k]].
std::vector<std::uint32_t> compose(const PermutationTable& first, const PermutationTable& second);
std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& first,
                                   const std::vector<std::uint32_t>& second);

/// Replaces the pair (copy_a, copy_b) by its image under the table.
void apply_gate(SystemState& state, const PermutationTable& table, int copy_a, int copy_b);

/// Binary form: "GHZT", u32 version, u32 n, u8 kind (0 = H, 1 = B), u8 code,
/// u8 node_i, u8 node_j, then 4^n little-endian u32 entries.
void write_table(std::ostream& out, const PermutationTable& table);
PermutationTable read_table(std::istream& in);

/// Thread-safe memo of tables keyed by (gate, n), optionally persisted as
/// one file per table under `directory`.
class TableCache {
 public:
  TableCache() = default;
  explicit TableCache(std::filesystem::path directory);

  std::shared_ptr<const PermutationTable> get(const GateDescriptor& gate, int n);

  /// Builds every H and B table for n and writes them when persistent.
  /// Returns the number of tables handled.
  std::size_t warm(int n);

  std::size_t size() const;
  const std::filesystem::path& directory() const { return directory_; }

  static std::filesystem::path file_name(const GateDescriptor& gate, int n);

 private:
  using Key = std::tuple<int, int, int, int, int>;
  static Key key(const GateDescriptor& gate, int n);

  std::filesystem::path directory_;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const PermutationTable>> tables_;
};

/// Process-wide cache without persistence.
TableCache& default_table_cache();

}  // namespace ghzsim
