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

#include "ghzsim/phase_bits.hpp"

#include <stdexcept>
#include <string>

namespace ghzsim {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli parse_pauli(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown Pauli '") + c + "'");
}

PhaseBits::PhaseBits(int n, std::uint32_t value) : value_(value), n_(n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
  }
  if (value >= (1u << n)) {
    throw std::invalid_argument("phase bits exceed " + std::to_string(n) + " bits");
  }
}

bool PhaseBits::x_bit() const { return (value_ >> (n_ - 1)) & 1u; }

bool PhaseBits::z_bit(int k) const {
  if (k < 1 || k > n_ - 1) {
    throw std::out_of_range("z bit index " + std::to_string(k) + " out of range");
  }
  return (value_ >> (n_ - 1 - k)) & 1u;
}

PhaseBits& PhaseBits::operator^=(PhaseBits mask) {
  if (mask.n_ != n_) {
    throw std::invalid_argument("phase bit width mismatch");
  }
  value_ ^= mask.value_;
  return *this;
}

std::string PhaseBits::to_string() const {
  std::string out = "x=";
  out += x_bit() ? '1' : '0';
  out += ",z=";
  for (int k = 1; k < n_; ++k) out += z_bit(k) ? '1' : '0';
  return out;
}

PhaseBits pauli_flip_mask(Pauli pauli, int qubit, int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
  }
  if (qubit < 1 || qubit > n) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  std::uint32_t mask = 0;
  const bool flips_x = pauli == Pauli::Z || pauli == Pauli::Y;
  const bool flips_z = pauli == Pauli::X || pauli == Pauli::Y;
  if (flips_x) mask |= 1u << (n - 1);
  if (flips_z) {
    // X_q anticommutes with Z_{q-1} Z_q and Z_q Z_{q+1}.
    if (qubit >= 2) mask |= 1u << (n - 1 - (qubit - 1));
    if (qubit <= n - 1) mask |= 1u << (n - 1 - qubit);
  }
  return PhaseBits(n, mask);
}

SystemState::SystemState(int n, int slots)
    : n_(n), bits_(static_cast<std::size_t>(slots), 0u), live_(static_cast<std::size_t>(slots), 0) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
  }
  if (slots < 1) throw std::invalid_argument("register needs at least one slot");
}

int SystemState::live_count() const {
  int count = 0;
  for (char l : live_) count += l ? 1 : 0;
  return count;
}

bool SystemState::live(int slot) const {
  if (slot < 0 || slot >= slots()) return false;
  return live_[static_cast<std::size_t>(slot)] != 0;
}

void SystemState::require_live(int slot) const {
  if (slot < 0 || slot >= slots()) {
    throw std::out_of_range("slot " + std::to_string(slot) + " outside register");
  }
  if (!live_[static_cast<std::size_t>(slot)]) {
    throw std::logic_error("slot " + std::to_string(slot) + " holds no live copy");
  }
}

PhaseBits SystemState::copy(int slot) const {
  require_live(slot);
  return PhaseBits(n_, bits_[static_cast<std::size_t>(slot)]);
}

void SystemState::load(int slot, PhaseBits bits) {
  if (slot < 0 || slot >= slots()) {
    throw std::out_of_range("slot " + std::to_string(slot) + " outside register");
  }
  if (live_[static_cast<std::size_t>(slot)]) {
    throw std::logic_error("slot " + std::to_string(slot) + " is occupied");
  }
  if (bits.qubits() != n_) throw std::invalid_argument("phase bit width mismatch");
  bits_[static_cast<std::size_t>(slot)] = bits.value();
  live_[static_cast<std::size_t>(slot)] = 1;
}

void SystemState::set(int slot, PhaseBits bits) {
  require_live(slot);
  if (bits.qubits() != n_) throw std::invalid_argument("phase bit width mismatch");
  bits_[static_cast<std::size_t>(slot)] = bits.value();
}

void SystemState::release(int slot) {
  require_live(slot);
  bits_[static_cast<std::size_t>(slot)] = 0;
  live_[static_cast<std::size_t>(slot)] = 0;
}

void apply_pauli(SystemState& state, int slot, int qubit, Pauli pauli) {
  PhaseBits current = state.copy(slot);
  current ^= pauli_flip_mask(pauli, qubit, state.qubits());
  state.set(slot, current);
}

}  // namespace ghzsim
