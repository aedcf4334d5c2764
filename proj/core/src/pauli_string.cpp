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

#include "ghzsim/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace ghzsim {

namespace {

// Exponent of i picked up when multiplying single-qubit Paulis (x1,z1)(x2,z2).
int g(int x1, int z1, int x2, int z2) {
  if (x1 == 0 && z1 == 0) return 0;
  if (x1 == 1 && z1 == 1) return z2 - x2;
  if (x1 == 1) return z2 * (2 * x2 - 1);
  return x2 * (1 - 2 * z2);
}

void check_width(int n) {
  if (n < 0 || n > kMaxOracleQubits) throw std::invalid_argument("Pauli string width out of range");
}

}  // namespace

PauliString PauliString::single(int n, int qubit, Pauli p) {
  check_width(n);
  if (qubit < 0 || qubit >= n) throw std::out_of_range("Pauli qubit index out of range");
  PauliString out = identity(n);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  if (p == Pauli::X || p == Pauli::Y) out.x = bit;
  if (p == Pauli::Z || p == Pauli::Y) out.z = bit;
  return out;
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    phase = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  const int n = static_cast<int>(text.size());
  check_width(n);
  PauliString out = identity(n);
  out.phase = phase;
  for (int k = 0; k < n; ++k) {
    const Pauli p = parse_pauli(text[static_cast<std::size_t>(k)]);
    const std::uint64_t bit = std::uint64_t{1} << k;
    if (p == Pauli::X || p == Pauli::Y) out.x |= bit;
    if (p == Pauli::Z || p == Pauli::Y) out.z |= bit;
  }
  return out;
}

Pauli PauliString::at(int qubit) const {
  const bool xb = (x >> qubit) & 1u;
  const bool zb = (z >> qubit) & 1u;
  if (xb && zb) return Pauli::Y;
  if (xb) return Pauli::X;
  if (zb) return Pauli::Z;
  return Pauli::I;
}

int PauliString::sign() const {
  if (!is_hermitian()) throw std::logic_error("non-Hermitian Pauli string has no sign");
  return (phase & 3) == 0 ? 1 : -1;
}

bool PauliString::commutes_with(const PauliString& other) const {
  return (std::popcount((x & other.z) ^ (z & other.x)) & 1) == 0;
}

std::string PauliString::to_string() const {
  std::string out;
  switch (phase & 3) {
    case 0: out = "+"; break;
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    default: out = "-i"; break;
  }
  for (int k = 0; k < qubits; ++k) out += to_char(at(k));
  return out;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.qubits != b.qubits) throw std::invalid_argument("Pauli string width mismatch");
  int phase = a.phase + b.phase;
  std::uint64_t support = (a.x | a.z) & (b.x | b.z);
  while (support) {
    const int k = std::countr_zero(support);
    support &= support - 1;
    phase += g(static_cast<int>((a.x >> k) & 1u), static_cast<int>((a.z >> k) & 1u),
               static_cast<int>((b.x >> k) & 1u), static_cast<int>((b.z >> k) & 1u));
  }
  return PauliString{a.x ^ b.x, a.z ^ b.z, ((phase % 4) + 4) % 4, a.qubits};
}

}  // namespace ghzsim
