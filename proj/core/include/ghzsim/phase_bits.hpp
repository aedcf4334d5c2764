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
#include <random>
#include <string>
#include <vector>

namespace ghzsim {

/// Random engine used throughout; every stochastic routine takes one by
/// reference so that no module holds hidden global state.
using Rng = std::mt19937_64;

/// Largest supported GHZ size. Pair-state tables hold 4^n entries.
inline constexpr int kMaxQubits = 10;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli parse_pauli(char c);

/// Signs of the stabilizer generators of one n-qubit GHZ-basis state.
///
/// The n bits are packed into an integer with the sign of X...X as the most
/// significant bit, followed by the signs of Z_1 Z_2, Z_2 Z_3, ...,
/// Z_{n-1} Z_n. A set bit means a "-" sign; the all-zero value is the
/// perfect |GHZ> state.
class PhaseBits {
 public:
  PhaseBits() = default;
  PhaseBits(int n, std::uint32_t value);

  static PhaseBits perfect(int n) { return PhaseBits(n, 0); }

  int qubits() const { return n_; }
  std::uint32_t value() const { return value_; }

  bool x_bit() const;
  /// Sign bit of Z_k Z_{k+1}, k in [1, n-1].
  bool z_bit(int k) const;
  /// All z bits packed with z_1 as the most significant of n-1 bits.
  std::uint32_t z_bits() const { return value_ & ((1u << (n_ - 1)) - 1u); }
  bool is_perfect() const { return value_ == 0; }

  PhaseBits& operator^=(PhaseBits mask);
  friend PhaseBits operator^(PhaseBits a, PhaseBits b) { return a ^= b; }
  friend bool operator==(PhaseBits a, PhaseBits b) = default;

  /// "x=0,z=10" style rendering.
  std::string to_string() const;

 private:
  std::uint32_t value_ = 0;
  int n_ = 0;
};

/// Mask of the phase bits flipped by a single-qubit Pauli acting on
/// `qubit` (1-based) of one copy.
PhaseBits pauli_flip_mask(Pauli pauli, int qubit, int n);

/// A register of m slots, each holding at most one live GHZ-basis copy.
/// Measured copies leave their slot free for a refill.
class SystemState {
 public:
  SystemState() = default;
  SystemState(int n, int slots);

  int qubits() const { return n_; }
  int slots() const { return static_cast<int>(bits_.size()); }
  int live_count() const;

  bool live(int slot) const;
  PhaseBits copy(int slot) const;
  std::uint32_t raw(int slot) const { return bits_[static_cast<std::size_t>(slot)]; }

  /// Places a fresh copy into a free slot.
  void load(int slot, PhaseBits bits);
  /// Overwrites a live copy.
  void set(int slot, PhaseBits bits);
  void release(int slot);

  void set_raw(int slot, std::uint32_t value) {
    bits_[static_cast<std::size_t>(slot)] = value;
  }

 private:
  void require_live(int slot) const;

  int n_ = 0;
  std::vector<std::uint32_t> bits_;
  std::vector<char> live_;
};

/// XORs the Pauli's flip mask into the live copy at `slot`.
void apply_pauli(SystemState& state, int slot, int qubit, Pauli pauli);

}  // namespace ghzsim
