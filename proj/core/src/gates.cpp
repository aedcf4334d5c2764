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

#include "ghzsim/gates.hpp"

#include <stdexcept>
#include <string>

namespace ghzsim {

namespace {

constexpr std::array<std::string_view, 6> kHNames = {
    "Identity", "SWAP", "CNOT12", "DCX21", "DCX12", "CNOT21"};

constexpr std::array<std::string_view, 8> kBNames = {
    "I", "IS", "SI", "SS", "CZ", "CZ.IS", "CZ.SI", "CZ.SS"};

// Heisenberg images of XI, IX, ZI, IZ for each homogeneous gate.
constexpr std::array<LocalImages, 6> kImages = {{
    {0b10, 0b01, 0b10, 0b01},  // Identity
    {0b01, 0b10, 0b01, 0b10},  // SWAP
    {0b11, 0b01, 0b10, 0b11},  // CNOT12
    {0b01, 0b11, 0b11, 0b10},  // DCX21
    {0b11, 0b10, 0b01, 0b11},  // DCX12
    {0b10, 0b11, 0b11, 0b01},  // CNOT21
}};

std::uint8_t push_through(std::uint8_t mask, std::uint8_t image_a, std::uint8_t image_b) {
  std::uint8_t out = 0;
  if (mask & 0b10) out ^= image_a;
  if (mask & 0b01) out ^= image_b;
  return out;
}

}  // namespace

std::string_view name(HKind kind) { return kHNames[static_cast<std::size_t>(kind)]; }

std::optional<HKind> parse_hkind(std::string_view text) {
  for (HKind k : kAllHKinds) {
    if (name(k) == text) return k;
  }
  return std::nullopt;
}

LocalImages local_images(HKind kind) { return kImages[static_cast<std::size_t>(kind)]; }

HKind then(HKind first, HKind second) {
  const LocalImages f = local_images(first);
  const LocalImages s = local_images(second);
  const LocalImages composed{push_through(f.xa, s.xa, s.xb), push_through(f.xb, s.xa, s.xb),
                             push_through(f.za, s.za, s.zb), push_through(f.zb, s.za, s.zb)};
  for (HKind k : kAllHKinds) {
    const LocalImages c = local_images(k);
    if (c.xa == composed.xa && c.xb == composed.xb && c.za == composed.za && c.zb == composed.zb) {
      return k;
    }
  }
  throw std::logic_error("H group is not closed under composition");
}

HKind inverse(HKind kind) {
  for (HKind k : kAllHKinds) {
    if (then(kind, k) == HKind::Identity) return k;
  }
  throw std::logic_error("H gate without inverse");
}

BGate BGate::from_code(int code, int node_i, int node_j) {
  if (code < 0 || code > 7) throw std::invalid_argument("B gate code outside [0, 7]");
  return BGate{(code & 4) != 0, (code & 2) != 0, (code & 1) != 0, node_i, node_j};
}

std::string_view b_code_name(int code) { return kBNames.at(static_cast<std::size_t>(code)); }

std::optional<int> parse_b_code(std::string_view text) {
  for (int c = 0; c < 8; ++c) {
    if (kBNames[static_cast<std::size_t>(c)] == text) return c;
  }
  return std::nullopt;
}

bool is_trivial(const GateDescriptor& gate) {
  if (const auto* h = std::get_if<HGate>(&gate)) return h->kind == HKind::Identity;
  return std::get<BGate>(gate).code() == 0;
}

void check_gate(const GateDescriptor& gate, int n) {
  if (n < 2) throw std::invalid_argument("GHZ gates need n >= 2");
  if (const auto* b = std::get_if<BGate>(&gate)) {
    if (b->node_i < 1 || b->node_j > n || b->node_i >= b->node_j) {
      throw std::invalid_argument("invalid node pair (" + std::to_string(b->node_i) + ", " +
                                  std::to_string(b->node_j) + ") for n = " + std::to_string(n));
    }
  }
}

std::string to_string(const GateDescriptor& gate) {
  if (const auto* h = std::get_if<HGate>(&gate)) return "H:" + std::string(name(h->kind));
  const auto& b = std::get<BGate>(gate);
  return "B:" + std::string(b_code_name(b.code())) + "@" + std::to_string(b.node_i) + "-" +
         std::to_string(b.node_j);
}

GateDescriptor parse_gate(std::string_view text) {
  if (text.starts_with("H:")) {
    if (auto k = parse_hkind(text.substr(2))) return HGate{*k};
  } else if (text.starts_with("B:")) {
    const auto at = text.find('@');
    const auto dash = text.find('-', at == std::string_view::npos ? 0 : at);
    if (at != std::string_view::npos && dash != std::string_view::npos) {
      if (auto code = parse_b_code(text.substr(2, at - 2))) {
        const int i = std::stoi(std::string(text.substr(at + 1, dash - at - 1)));
        const int j = std::stoi(std::string(text.substr(dash + 1)));
        return BGate::from_code(*code, i, j);
      }
    }
  }
  throw std::invalid_argument("cannot parse gate descriptor '" + std::string(text) + "'");
}

}  // namespace ghzsim
