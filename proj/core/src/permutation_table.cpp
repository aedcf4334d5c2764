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

#include "ghzsim/permutation_table.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ghzsim {

namespace {

constexpr std::array<char, 4> kMagic = {'G', 'H', 'Z', 'T'};
constexpr std::uint32_t kVersion = 1;

std::uint32_t select(std::uint8_t image, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0;
  if (image & 0b10) out ^= a;
  if (image & 0b01) out ^= b;
  return out;
}

// Mask of the z bits z_i ... z_{j-1} inside one copy's n-bit value.
std::uint32_t z_range_mask(int i, int j, int n) {
  std::uint32_t mask = 0;
  for (int k = i; k < j; ++k) mask |= 1u << (n - 1 - k);
  return mask;
}

std::uint32_t parity(std::uint32_t v) { return static_cast<std::uint32_t>(std::popcount(v) & 1); }

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) {
    throw std::runtime_error("truncated permutation table file");
  }
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

std::uint8_t get_u8(std::istream& in) {
  char c;
  if (!in.get(c)) throw std::runtime_error("truncated permutation table file");
  return static_cast<std::uint8_t>(c);
}

}  // namespace

PermutationTable::PermutationTable(GateDescriptor gate, int n, std::vector<std::uint32_t> entries)
    : gate_(gate), n_(n), entries_(std::move(entries)) {
  if (n < 2 || n > kMaxQubits) throw std::invalid_argument("table size out of range");
  check_gate(gate_, n_);
  const std::size_t size = std::size_t{1} << (2 * n);
  if (entries_.size() != size) {
    throw std::invalid_argument("permutation table needs " + std::to_string(size) + " entries");
  }
  std::vector<char> seen(size, 0);
  for (std::uint32_t v : entries_) {
    if (v >= size || seen[v]) throw std::invalid_argument("table is not a bijection");
    seen[v] = 1;
  }
  if (entries_[0] != 0) throw std::invalid_argument("table does not fix the all-plus pair state");
}

bool PermutationTable::is_identity() const {
  for (std::uint32_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] != k) return false;
  }
  return true;
}

PermutationTable build_permutation_table(const GateDescriptor& gate, int n) {
  check_gate(gate, n);
  if (n > kMaxQubits) throw std::invalid_argument("n exceeds supported maximum");
  const std::uint32_t copy_mask = (1u << n) - 1u;
  const std::uint32_t x_mask = 1u << (n - 1);
  const std::uint32_t z_mask = x_mask - 1u;
  const std::uint32_t size = 1u << (2 * n);
  std::vector<std::uint32_t> entries(size);

  if (const auto* h = std::get_if<HGate>(&gate)) {
    // New sign of a generator g is the old sign of U^dagger g U, read off
    // from the forward images of the inverse gate.
    const LocalImages inv = local_images(inverse(h->kind));
    for (std::uint32_t k = 0; k < size; ++k) {
      const std::uint32_t a = k >> n;
      const std::uint32_t b = k & copy_mask;
      const std::uint32_t xa = a & x_mask, xb = b & x_mask;
      const std::uint32_t za = a & z_mask, zb = b & z_mask;
      const std::uint32_t na = select(inv.xa, xa, xb) | select(inv.za, za, zb);
      const std::uint32_t nb = select(inv.xb, xa, xb) | select(inv.zb, za, zb);
      entries[k] = pair_index(na, nb, n);
    }
  } else {
    const auto& g = std::get<BGate>(gate);
    const std::uint32_t range = z_range_mask(g.node_i, g.node_j, n);
    for (std::uint32_t k = 0; k < size; ++k) {
      std::uint32_t a = k >> n;
      std::uint32_t b = k & copy_mask;
      const std::uint32_t pa = parity(a & range);
      const std::uint32_t pb = parity(b & range);
      std::uint32_t flip_a = 0, flip_b = 0;
      if (g.cz) {
        flip_a ^= pb;
        flip_b ^= pa;
      }
      if (g.s1) flip_a ^= pa;
      if (g.s2) flip_b ^= pb;
      if (flip_a) a ^= x_mask;
      if (flip_b) b ^= x_mask;
      entries[k] = pair_index(a, b, n);
    }
  }
  return PermutationTable(gate, n, std::move(entries));
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& first,
                                   const std::vector<std::uint32_t>& second) {
  if (first.size() != second.size()) throw std::invalid_argument("table size mismatch");
  std::vector<std::uint32_t> out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) out[k] = second[first[k]];
  return out;
}

std::vector<std::uint32_t> compose(const PermutationTable& first, const PermutationTable& second) {
  return compose(first.entries(), second.entries());
}

void apply_gate(SystemState& state, const PermutationTable& table, int copy_a, int copy_b) {
  if (copy_a == copy_b) throw std::invalid_argument("gate needs two distinct copies");
  if (table.qubits() != state.qubits()) throw std::invalid_argument("table width mismatch");
  const int n = state.qubits();
  const std::uint32_t image =
      table[pair_index(state.copy(copy_a).value(), state.copy(copy_b).value(), n)];
  state.set(copy_a, PhaseBits(n, image >> n));
  state.set(copy_b, PhaseBits(n, image & ((1u << n) - 1u)));
}

void write_table(std::ostream& out, const PermutationTable& table) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(table.qubits()));
  std::uint8_t kind = 0, code = 0, ni = 0, nj = 0;
  if (const auto* h = std::get_if<HGate>(&table.gate())) {
    code = static_cast<std::uint8_t>(h->kind);
  } else {
    const auto& b = std::get<BGate>(table.gate());
    kind = 1;
    code = static_cast<std::uint8_t>(b.code());
    ni = static_cast<std::uint8_t>(b.node_i);
    nj = static_cast<std::uint8_t>(b.node_j);
  }
  for (std::uint8_t byte : {kind, code, ni, nj}) out.put(static_cast<char>(byte));
  for (std::uint32_t v : table.entries()) put_u32(out, v);
  if (!out) throw std::runtime_error("failed to write permutation table");
}

PermutationTable read_table(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not a permutation table file");
  }
  if (get_u32(in) != kVersion) throw std::runtime_error("unsupported table file version");
  const std::uint32_t n = get_u32(in);
  if (n < 2 || n > static_cast<std::uint32_t>(kMaxQubits)) {
    throw std::runtime_error("table file has invalid n");
  }
  const std::uint8_t kind = get_u8(in);
  const std::uint8_t code = get_u8(in);
  const std::uint8_t ni = get_u8(in);
  const std::uint8_t nj = get_u8(in);
  GateDescriptor gate;
  if (kind == 0) {
    if (code >= kAllHKinds.size()) throw std::runtime_error("table file has invalid H code");
    gate = HGate{kAllHKinds[code]};
  } else if (kind == 1) {
    gate = BGate::from_code(code, ni, nj);
  } else {
    throw std::runtime_error("table file has invalid gate kind");
  }
  std::vector<std::uint32_t> entries(std::size_t{1} << (2 * n));
  for (auto& v : entries) v = get_u32(in);
  return PermutationTable(gate, static_cast<int>(n), std::move(entries));
}

TableCache::TableCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  if (!directory_.empty()) std::filesystem::create_directories(directory_);
}

TableCache::Key TableCache::key(const GateDescriptor& gate, int n) {
  if (const auto* h = std::get_if<HGate>(&gate)) {
    return {n, 0, static_cast<int>(h->kind), 0, 0};
  }
  const auto& b = std::get<BGate>(gate);
  return {n, 1, b.code(), b.node_i, b.node_j};
}

std::filesystem::path TableCache::file_name(const GateDescriptor& gate, int n) {
  std::string name = "n" + std::to_string(n) + "_";
  if (const auto* h = std::get_if<HGate>(&gate)) {
    name += "H" + std::to_string(static_cast<int>(h->kind));
  } else {
    const auto& b = std::get<BGate>(gate);
    name += "B" + std::to_string(b.code()) + "_" + std::to_string(b.node_i) + "_" +
            std::to_string(b.node_j);
  }
  return name + ".ghzt";
}

std::shared_ptr<const PermutationTable> TableCache::get(const GateDescriptor& gate, int n) {
  const Key k = key(gate, n);
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(k); it != tables_.end()) return it->second;
  }
  std::shared_ptr<const PermutationTable> table;
  const auto path = directory_.empty() ? std::filesystem::path{} : directory_ / file_name(gate, n);
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    auto loaded = std::make_shared<const PermutationTable>(read_table(in));
    if (!(loaded->gate() == gate) || loaded->qubits() != n) {
      throw std::runtime_error("cache file " + path.string() + " holds a different gate");
    }
    table = std::move(loaded);
  } else {
    table = std::make_shared<const PermutationTable>(build_permutation_table(gate, n));
    if (!path.empty()) {
      std::ofstream out(path, std::ios::binary);
      write_table(out, *table);
    }
  }
  std::lock_guard lock(mutex_);
  return tables_.emplace(k, std::move(table)).first->second;
}

std::size_t TableCache::warm(int n) {
  std::size_t count = 0;
  for (HKind kind : kAllHKinds) {
    get(HGate{kind}, n);
    ++count;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int code = 0; code < 8; ++code) {
        get(BGate::from_code(code, i, j), n);
        ++count;
      }
    }
  }
  return count;
}

std::size_t TableCache::size() const {
  std::lock_guard lock(mutex_);
  return tables_.size();
}

TableCache& default_table_cache() {
  static TableCache cache;
  return cache;
}

}  // namespace ghzsim
