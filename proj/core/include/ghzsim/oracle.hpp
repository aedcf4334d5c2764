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
#include <vector>

#include "ghzsim/clifford_map.hpp"
#include "ghzsim/gates.hpp"
#include "ghzsim/tableau.hpp"

namespace ghzsim {

// Two n-qubit copies live on 2n qubits in node-major order: node i (1-based)
// holds qubit 2(i-1) of copy_a and qubit 2(i-1)+1 of copy_b.
inline int pair_qubit(int node, int copy) { return 2 * (node - 1) + copy; }

/// Unsigned GHZ (x) GHZ generators, one per pair-index bit, most
/// significant first: X..X on copy_a, Z_iZ_{i+1} on copy_a, then copy_b.
std::vector<PauliString> pair_generators(int n);

/// Tableau of the pair state with the given 2n-bit pair index.
StabilizerTableau pair_state_tableau(int n, std::uint32_t pair_state);

/// The gate as a Clifford on the 2n pair qubits. H gates are assembled
/// from CNOTs at every node, B gates from S and CZ at the two nodes.
CliffordMap clifford_of(const GateDescriptor& gate, int n);

/// True iff the map sends the GHZ (x) GHZ stabilizer group onto itself up
/// to signs.
bool is_ghz_preserving(const CliffordMap& clifford, int n);

/// Pair index of the image of `pair_state`, read off by conjugating its
/// tableau. Throws std::domain_error if the map is not GHZ-preserving.
std::uint32_t readout(const CliffordMap& clifford, int n, std::uint32_t pair_state);

/// The sign action splits as image(s) = table[s] XOR offset with table
/// linear over GF(2); `table` is the phaseless (offset-free) part.
struct OracleReadout {
  std::vector<std::uint32_t> table;
  std::uint32_t offset = 0;
};

/// Conjugates the tableau of every pair state.
OracleReadout oracle_permutation(const CliffordMap& clifford, int n);
/// Reads only the 2n + 1 basis states and extends linearly.
OracleReadout oracle_permutation_linear(const CliffordMap& clifford, int n);

/// Images of the 2n unit pair states, i.e. the linear map's columns.
std::vector<std::uint32_t> basis_images(const std::vector<std::uint32_t>& table, int n);
/// Whether table[a ^ b] == table[a] ^ table[b] for all a, b.
bool is_linear(const std::vector<std::uint32_t>& table);

/// All 720 phaseless two-qubit Cliffords, closed under {H, S, CNOT}.
std::vector<CliffordMap> enumerate_two_qubit_phaseless_cliffords();

struct EnumeratedGate {
  HKind h;
  std::vector<int> b_codes;  ///< code of the B gate on nodes (k, k+1)
  std::vector<std::uint32_t> columns;  ///< basis_images of its permutation
};

struct Enumeration {
  std::vector<EnumeratedGate> gates;  ///< distinct permutations, in (h, b_1, ...) order
  std::size_t candidates = 0;
  std::size_t duplicates = 0;
  bool all_preserving = true;
  bool oracle_agrees = true;  ///< fast tables equal oracle readouts
};

/// Builds every h followed by B gates on adjacent pairs and checks each
/// candidate with the oracle.
Enumeration enumerate_ghz_preserving(int n);

struct ConverseResult {
  std::size_t candidates = 0;
  std::size_t passing = 0;
  std::size_t distinct_permutations = 0;
  bool matches_constructive = false;
};

/// Exhausts node-local tuples of phaseless two-qubit Cliffords (one per
/// node, 720^n candidates, pruned node by node) and counts the
/// GHZ-preserving ones.
ConverseResult brute_force_converse(int n);

/// "(0)(1 5 3)..." style rendering of a permutation.
std::string cycle_notation(const std::vector<std::uint32_t>& table);

}  // namespace ghzsim
