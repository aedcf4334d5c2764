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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace ghzsim {

/// The six homogeneous gates, in the column order of the H-group table.
/// "1" is the first copy (copy_a) and "2" the second (copy_b) at each node.
enum class HKind : std::uint8_t { Identity, SWAP, CNOT12, DCX21, DCX12, CNOT21 };

inline constexpr std::array<HKind, 6> kAllHKinds = {
    HKind::Identity, HKind::SWAP,  HKind::CNOT12,
    HKind::DCX21,    HKind::DCX12, HKind::CNOT21};

std::string_view name(HKind kind);
std::optional<HKind> parse_hkind(std::string_view text);

/// Phaseless action of the two-qubit gate on one node's qubit pair, as
/// 2-bit masks: bit 1 is the copy_a component, bit 0 the copy_b component.
/// E.g. CNOT12 sends X on copy_a to X on both copies, so `xa == 0b11`.
struct LocalImages {
  std::uint8_t xa;
  std::uint8_t xb;
  std::uint8_t za;
  std::uint8_t zb;
};

LocalImages local_images(HKind kind);

/// Group product: the gate equivalent to applying `first` and then `second`.
HKind then(HKind first, HKind second);
HKind inverse(HKind kind);

struct HGate {
  HKind kind = HKind::Identity;
  friend bool operator==(const HGate&, const HGate&) = default;
};

/// A bilocal gate g.(f1 x f2) applied identically at nodes i < j, with
/// g in {I, CZ} and f1, f2 in {I, S} acting on copy_a and copy_b.
struct BGate {
  bool cz = false;
  bool s1 = false;
  bool s2 = false;
  int node_i = 1;
  int node_j = 2;

  /// 0..7 as cz*4 + s1*2 + s2, matching the B-group table order.
  int code() const { return (cz ? 4 : 0) | (s1 ? 2 : 0) | (s2 ? 1 : 0); }
  static BGate from_code(int code, int node_i, int node_j);

  friend bool operator==(const BGate&, const BGate&) = default;
};

std::string_view b_code_name(int code);
std::optional<int> parse_b_code(std::string_view text);

using GateDescriptor = std::variant<HGate, BGate>;

/// True for the identity element of either alphabet.
bool is_trivial(const GateDescriptor& gate);

/// Throws std::invalid_argument when the gate does not fit an n-node GHZ.
void check_gate(const GateDescriptor& gate, int n);

/// "H:CNOT12" or "B:CZ.SI@1-3".
std::string to_string(const GateDescriptor& gate);
GateDescriptor parse_gate(std::string_view text);

}  // namespace ghzsim
