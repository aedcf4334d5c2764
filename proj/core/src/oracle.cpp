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

#include "ghzsim/oracle.hpp"

#include <array>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "ghzsim/permutation_table.hpp"

namespace ghzsim {

namespace {

void check_n(int n, int max_n) {
  if (n < 2 || n > max_n) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside [2, " +
                                std::to_string(max_n) + "]");
  }
}

std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

std::uint32_t signs_of(const GroupSolver& solver, const std::vector<PauliString>& generators) {
  const int bits = static_cast<int>(generators.size());
  std::uint32_t out = 0;
  for (int j = 0; j < bits; ++j) {
    const auto s = solver.sign_of(generators[static_cast<std::size_t>(j)]);
    if (!s) throw std::domain_error("map does not preserve the GHZ pair stabilizer group");
    if (*s < 0) out |= 1u << (bits - 1 - j);
  }
  return out;
}

std::uint32_t expand(const std::vector<std::uint32_t>& columns, std::uint32_t s) {
  std::uint32_t out = 0;
  const int bits = static_cast<int>(columns.size());
  for (int k = 0; k < bits; ++k) {
    if ((s >> k) & 1u) out ^= columns[static_cast<std::size_t>(k)];
  }
  return out;
}

// Key of a phaseless two-qubit map: 4 bits per generator image.
std::uint32_t local_key(const CliffordMap& m) {
  std::uint32_t key = 0;
  for (int k = 0; k < 2; ++k) {
    for (const PauliString* p : {&m.x_image(k), &m.z_image(k)}) {
      key = (key << 4) | static_cast<std::uint32_t>((p->x << 2) | p->z);
    }
  }
  return key;
}

}  // namespace

std::vector<PauliString> pair_generators(int n) {
  check_n(n, kMaxOracleQubits / 2);
  const int q = 2 * n;
  std::vector<PauliString> out;
  for (int copy = 0; copy < 2; ++copy) {
    PauliString x = PauliString::identity(q);
    for (int node = 1; node <= n; ++node) x.x |= bit(pair_qubit(node, copy));
    out.push_back(x);
    for (int node = 1; node < n; ++node) {
      PauliString zz = PauliString::identity(q);
      zz.z = bit(pair_qubit(node, copy)) | bit(pair_qubit(node + 1, copy));
      out.push_back(zz);
    }
  }
  return out;
}

StabilizerTableau pair_state_tableau(int n, std::uint32_t pair_state) {
  auto rows = pair_generators(n);
  const int bits = 2 * n;
  if (pair_state >> bits) throw std::invalid_argument("pair state exceeds 2n bits");
  for (int j = 0; j < bits; ++j) {
    if ((pair_state >> (bits - 1 - j)) & 1u) rows[static_cast<std::size_t>(j)].phase = 2;
  }
  return StabilizerTableau(bits, std::move(rows));
}

CliffordMap clifford_of(const GateDescriptor& gate, int n) {
  check_gate(gate, n);
  const int q = 2 * n;
  CliffordMap out(q);
  if (const auto* h = std::get_if<HGate>(&gate)) {
    for (int node = 1; node <= n; ++node) {
      const CliffordMap c12 = CliffordMap::cnot(q, pair_qubit(node, 0), pair_qubit(node, 1));
      const CliffordMap c21 = CliffordMap::cnot(q, pair_qubit(node, 1), pair_qubit(node, 0));
      std::vector<const CliffordMap*> sequence;
      switch (h->kind) {
        case HKind::Identity: break;
        case HKind::SWAP: sequence = {&c12, &c21, &c12}; break;
        case HKind::CNOT12: sequence = {&c12}; break;
        case HKind::DCX21: sequence = {&c12, &c21}; break;
        case HKind::DCX12: sequence = {&c21, &c12}; break;
        case HKind::CNOT21: sequence = {&c21}; break;
      }
      for (const auto* step : sequence) out = then(out, *step);
    }
    return out;
  }
  const auto& b = std::get<BGate>(gate);
  for (int node : {b.node_i, b.node_j}) {
    const int qa = pair_qubit(node, 0);
    const int qb = pair_qubit(node, 1);
    if (b.s1) out = then(out, CliffordMap::phase(q, qa));
    if (b.s2) out = then(out, CliffordMap::phase(q, qb));
    if (b.cz) out = then(out, CliffordMap::cz(q, qa, qb));
  }
  return out;
}

bool is_ghz_preserving(const CliffordMap& clifford, int n) {
  if (clifford.qubits() != 2 * n) throw std::invalid_argument("map must act on 2n qubits");
  const GroupSolver solver(pair_state_tableau(n, 0));
  for (const auto& g : pair_generators(n)) {
    if (!solver.in_span(clifford.apply(g))) return false;
  }
  return true;
}

std::uint32_t readout(const CliffordMap& clifford, int n, std::uint32_t pair_state) {
  const auto conjugated = conjugate(pair_state_tableau(n, pair_state), clifford);
  return signs_of(GroupSolver(conjugated), pair_generators(n));
}

OracleReadout oracle_permutation(const CliffordMap& clifford, int n) {
  OracleReadout out;
  const std::uint32_t size = 1u << (2 * n);
  out.offset = readout(clifford, n, 0);
  out.table.resize(size);
  for (std::uint32_t s = 0; s < size; ++s) out.table[s] = readout(clifford, n, s) ^ out.offset;
  return out;
}

OracleReadout oracle_permutation_linear(const CliffordMap& clifford, int n) {
  OracleReadout out;
  out.offset = readout(clifford, n, 0);
  std::vector<std::uint32_t> columns;
  for (int k = 0; k < 2 * n; ++k) columns.push_back(readout(clifford, n, 1u << k) ^ out.offset);
  const std::uint32_t size = 1u << (2 * n);
  out.table.resize(size);
  for (std::uint32_t s = 0; s < size; ++s) out.table[s] = expand(columns, s);
  return out;
}

std::vector<std::uint32_t> basis_images(const std::vector<std::uint32_t>& table, int n) {
  if (table.size() != (std::size_t{1} << (2 * n))) throw std::invalid_argument("table size mismatch");
  std::vector<std::uint32_t> out;
  for (int k = 0; k < 2 * n; ++k) out.push_back(table[1u << k]);
  return out;
}

bool is_linear(const std::vector<std::uint32_t>& table) {
  for (std::uint32_t a = 0; a < table.size(); ++a) {
    for (std::uint32_t b = 0; b < table.size(); ++b) {
      if (table[a ^ b] != (table[a] ^ table[b])) return false;
    }
  }
  return true;
}

std::vector<CliffordMap> enumerate_two_qubit_phaseless_cliffords() {
  const std::array<CliffordMap, 5> generators = {
      CliffordMap::hadamard(2, 0), CliffordMap::hadamard(2, 1), CliffordMap::phase(2, 0),
      CliffordMap::phase(2, 1), CliffordMap::cnot(2, 0, 1)};
  std::vector<CliffordMap> out = {CliffordMap(2)};
  std::set<std::uint32_t> seen = {local_key(out.front())};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      CliffordMap next = then(out[head], g).phaseless();
      if (seen.insert(local_key(next)).second) out.push_back(std::move(next));
    }
  }
  return out;
}

Enumeration enumerate_ghz_preserving(int n) {
  check_n(n, 5);
  Enumeration result;
  std::vector<std::vector<PermutationTable>> b_tables(static_cast<std::size_t>(n - 1));
  std::vector<std::vector<CliffordMap>> b_maps(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    for (int code = 0; code < 8; ++code) {
      const GateDescriptor b = BGate::from_code(code, k, k + 1);
      b_tables[static_cast<std::size_t>(k - 1)].push_back(build_permutation_table(b, n));
      b_maps[static_cast<std::size_t>(k - 1)].push_back(clifford_of(b, n));
    }
  }
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<int> codes(static_cast<std::size_t>(n - 1));

  for (HKind h : kAllHKinds) {
    const auto h_table = build_permutation_table(HGate{h}, n);
    const auto h_map = clifford_of(HGate{h}, n);
    std::function<void(int, const std::vector<std::uint32_t>&, const CliffordMap&)> descend =
        [&](int depth, const std::vector<std::uint32_t>& table, const CliffordMap& map) {
          if (depth == n - 1) {
            ++result.candidates;
            if (!is_ghz_preserving(map, n)) {
              result.all_preserving = false;
              return;
            }
            auto columns = basis_images(table, n);
            const auto oracle = oracle_permutation_linear(map, n);
            if (oracle.table != table) result.oracle_agrees = false;
            for (std::uint32_t s = 0; s < table.size(); ++s) {
              if (table[s] != expand(columns, s)) result.oracle_agrees = false;
            }
            if (!seen.insert(columns).second) {
              ++result.duplicates;
              return;
            }
            result.gates.push_back({h, codes, std::move(columns)});
            return;
          }
          const auto d = static_cast<std::size_t>(depth);
          for (int code = 0; code < 8; ++code) {
            codes[d] = code;
            descend(depth + 1, compose(table, b_tables[d][static_cast<std::size_t>(code)].entries()),
                    then(map, b_maps[d][static_cast<std::size_t>(code)]));
          }
        };
    descend(0, h_table.entries(), h_map);
  }
  return result;
}

ConverseResult brute_force_converse(int n) {
  check_n(n, 4);
  const auto locals = enumerate_two_qubit_phaseless_cliffords();
  const int q = 2 * n;
  const GroupSolver span(pair_state_tableau(n, 0));

  // Phaseless image of the local X or Z on `copy` under map m, lifted to node.
  auto lift = [&](const CliffordMap& m, bool x_type, int copy, int node) {
    const PauliString& local = x_type ? m.x_image(copy) : m.z_image(copy);
    PauliString out = PauliString::identity(q);
    for (int c = 0; c < 2; ++c) {
      if ((local.x >> c) & 1u) out.x |= bit(pair_qubit(node, c));
      if ((local.z >> c) & 1u) out.z |= bit(pair_qubit(node, c));
    }
    return out;
  };
  auto xor_ops = [](PauliString a, const PauliString& b) {
    a.x ^= b.x;
    a.z ^= b.z;
    return a;
  };

  ConverseResult result;
  result.candidates = 1;
  for (int k = 0; k < n; ++k) result.candidates *= locals.size();

  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::size_t> choice(static_cast<std::size_t>(n));
  std::function<void(int)> descend = [&](int node) {
    if (node > n) {
      for (int copy = 0; copy < 2; ++copy) {
        PauliString image = PauliString::identity(q);
        for (int v = 1; v <= n; ++v) {
          image = xor_ops(image, lift(locals[choice[static_cast<std::size_t>(v - 1)]], true, copy, v));
        }
        if (!span.in_span(image)) return;
      }
      CliffordMap full(q);
      for (int v = 1; v <= n; ++v) {
        const std::array<int, 2> positions = {pair_qubit(v, 0), pair_qubit(v, 1)};
        full = then(full, CliffordMap::embed(locals[choice[static_cast<std::size_t>(v - 1)]], q,
                                             positions));
      }
      if (!is_ghz_preserving(full, n)) throw std::logic_error("pruned search accepted a bad map");
      ++result.passing;
      found.insert(basis_images(oracle_permutation_linear(full, n).table, n));
      return;
    }
    for (std::size_t m = 0; m < locals.size(); ++m) {
      choice[static_cast<std::size_t>(node - 1)] = m;
      if (node >= 2) {
        bool ok = true;
        for (int copy = 0; copy < 2 && ok; ++copy) {
          const auto image = xor_ops(
              lift(locals[choice[static_cast<std::size_t>(node - 2)]], false, copy, node - 1),
              lift(locals[m], false, copy, node));
          ok = span.in_span(image);
        }
        if (!ok) continue;
      }
      descend(node + 1);
    }
  };
  descend(1);

  result.distinct_permutations = found.size();
  std::set<std::vector<std::uint32_t>> constructive;
  for (const auto& g : enumerate_ghz_preserving(n).gates) constructive.insert(g.columns);
  result.matches_constructive = result.passing == constructive.size() && found == constructive;
  return result;
}

std::string cycle_notation(const std::vector<std::uint32_t>& table) {
  std::string out;
  std::vector<char> done(table.size(), 0);
  for (std::uint32_t start = 0; start < table.size(); ++start) {
    if (done[start]) continue;
    out += '(';
    std::uint32_t k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = 1;
      if (!first) out += ' ';
      out += std::to_string(k);
      first = false;
      k = table[k];
    }
    out += ')';
  }
  return out;
}

}  // namespace ghzsim
