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

// Dense density-matrix reference for GHZ distillation circuits. It acts on
// physical qubits with explicit gate matrices and shares no code with the
// phase-bit simulator beyond the circuit and config structs.

#include <complex>
#include <cstdint>
#include <vector>

#include "ghzsim/circuit.hpp"

namespace ghzsim::testing {

using cplx = std::complex<double>;

class DensityMatrix {
 public:
  explicit DensityMatrix(int qubits);

  int qubits() const { return qubits_; }
  std::size_t dim() const { return dim_; }
  cplx& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
  cplx at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
  double trace() const;

  /// rho -> U rho U^dagger for a 2x2 matrix {u00, u01, u10, u11}.
  void apply_1q(int q, const std::array<cplx, 4>& u);
  void apply_cnot(int control, int target);
  void apply_cz(int a, int b);
  /// rho -> sum_k p_k P_k rho P_k over {I, X, Y, Z}.
  void pauli_channel(int q, const std::array<double, 4>& probs);
  /// Convex mixture of rho under the given operations.
  void mix(const std::vector<std::pair<double, DensityMatrix>>& parts);

 private:
  int qubits_;
  std::size_t dim_;
  std::vector<cplx> m_;
};

/// State vector of the n-qubit GHZ basis state labelled by `bits`
/// (x bit first, then z_1..z_{n-1}), little-endian qubit order.
std::vector<cplx> ghz_basis_vector(int n, std::uint32_t bits);

/// Physical two-copy action of a gate on a 2n-qubit state vector, qubit
/// index = copy * n + (node - 1); includes the Pauli correction that fixes
/// the perfect pair.
void apply_gate_vector(std::vector<cplx>& psi, const GateDescriptor& gate, int n);

/// Permutation of pair labels (a << n | b) induced by the gate, read off
/// state vectors.
std::vector<std::uint32_t> dense_permutation(const GateDescriptor& gate, int n);

struct DenseResult {
  double p_succ = 0;
  double f_out = 0;
  double f_out_joint = 0;
};

/// Exact run of the circuit on n * R qubits. Practical up to ~10 qubits.
DenseResult dense_run(const Circuit& circuit, const CircuitConfig& config);

}  // namespace ghzsim::testing
