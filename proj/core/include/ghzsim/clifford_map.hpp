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

#include <span>
#include <vector>

#include "ghzsim/pauli_string.hpp"

namespace ghzsim {

/// A Clifford unitary up to global phase, stored as the images of X_k and
/// Z_k under conjugation U P U^dagger.
class CliffordMap {
 public:
  explicit CliffordMap(int n = 0);
  CliffordMap(std::vector<PauliString> x_images, std::vector<PauliString> z_images);

  int qubits() const { return n_; }
  const PauliString& x_image(int k) const { return x_images_.at(static_cast<std::size_t>(k)); }
  const PauliString& z_image(int k) const { return z_images_.at(static_cast<std::size_t>(k)); }
  void set_images(int k, PauliString x_image, PauliString z_image);

  /// U P U^dagger with exact phase.
  PauliString apply(const PauliString& p) const;

  /// Hermitian images obeying the canonical commutation relations.
  bool is_valid() const;
  /// Same map with every generator image given a "+" sign.
  CliffordMap phaseless() const;
  bool same_phaseless(const CliffordMap& other) const;

  friend bool operator==(const CliffordMap&, const CliffordMap&) = default;

  static CliffordMap hadamard(int n, int q);
  static CliffordMap phase(int n, int q);
  static CliffordMap cnot(int n, int control, int target);
  static CliffordMap cz(int n, int a, int b);
  /// Lifts a map on local.qubits() qubits onto qubits `positions` of n.
  static CliffordMap embed(const CliffordMap& local, int n, std::span<const int> positions);

 private:
  int n_;
  std::vector<PauliString> x_images_;
  std::vector<PauliString> z_images_;
};

/// The map of "apply `first`, then `second`".
CliffordMap then(const CliffordMap& first, const CliffordMap& second);

}  // namespace ghzsim
