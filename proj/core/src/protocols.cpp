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

#include "ghzsim/protocols.hpp"

#include <functional>
#include <stdexcept>

namespace ghzsim {

namespace {

CircuitConfig base_config(const BaselineParams& params, int N, int R) {
  CircuitConfig c;
  c.n = params.n;
  c.N = N;
  c.K = 1;
  c.R = R;
  c.noise = params.noise;
  c.f_in = params.f_in;
  c.validate();
  return c;
}

// Depth-first binary tree. round(level, kept, measured) appends the
// two-copy step that merges the copy in `measured` into `kept`.
Circuit tree_circuit(int levels, int R,
                     const std::function<void(Circuit&, int level, int kept, int measured)>& round) {
  Circuit c;
  std::vector<char> fresh(static_cast<std::size_t>(R), 0);
  const int initial = std::min(1 << levels, R);
  for (int s = 0; s < initial; ++s) fresh[static_cast<std::size_t>(s)] = 1;

  std::function<void(int, int)> produce = [&](int level, int slot) {
    if (level == 0) {
      if (fresh[static_cast<std::size_t>(slot)]) {
        fresh[static_cast<std::size_t>(slot)] = 0;
      } else {
        c.elements.push_back(Refill{slot});
      }
      return;
    }
    produce(level - 1, slot);
    produce(level - 1, slot + 1);
    round(c, level, slot, slot + 1);
  };
  produce(levels, 0);
  return c;
}

}  // namespace

SequenceConfig SequenceConfig::parse(std::string_view bases) {
  if (bases.empty()) throw std::invalid_argument("sequence needs at least one basis");
  SequenceConfig out;
  for (char ch : bases) out.bases.push_back(parse_basis(std::string_view(&ch, 1)));
  return out;
}

std::string SequenceConfig::to_string() const {
  std::string out;
  for (Basis b : bases) out += ghzsim::to_char(b);
  return out;
}

Circuit pumping_round_circuit(int stored, int raw) {
  Circuit c;
  c.elements.push_back(HApply{HKind::CNOT12, stored, raw});
  c.elements.push_back(Measure{raw, Basis::Z});
  return c;
}

ProtocolCircuit pumping(const PumpingConfig& config, const BaselineParams& params) {
  if (config.rounds < 1) throw std::invalid_argument("pumping needs at least one round");
  ProtocolCircuit p{"pumping", {}, base_config(params, config.rounds + 1, 2)};
  for (int r = 0; r < config.rounds; ++r) {
    if (r > 0) p.circuit.elements.push_back(Refill{1});
    for (const auto& e : pumping_round_circuit(0, 1).elements) p.circuit.elements.push_back(e);
  }
  return p;
}

ProtocolCircuit nested(const NestedConfig& config, const BaselineParams& params) {
  if (config.levels < 1) throw std::invalid_argument("nested needs at least one level");
  if (config.levels > 15) throw std::invalid_argument("nested supports at most 15 levels");
  const int R = config.levels + 1;
  ProtocolCircuit p{"nested", {}, base_config(params, 1 << config.levels, R)};
  p.circuit = tree_circuit(config.levels, R, [&](Circuit& c, int level, int kept, int measured) {
    for (const auto& e : pumping_round_circuit(kept, measured).elements) c.elements.push_back(e);
    if (config.twirl_between_rounds && level < config.levels) c.elements.push_back(Twirl{kept});
  });
  return p;
}

ProtocolCircuit sequence(const SequenceConfig& config, const BaselineParams& params) {
  if (config.bases.empty()) throw std::invalid_argument("sequence needs at least one basis");
  const int levels = static_cast<int>(config.bases.size());
  if (levels > 15) throw std::invalid_argument("sequence supports at most 15 rounds");
  const int R = levels + 1;
  ProtocolCircuit p{"sequence", {}, base_config(params, 1 << levels, R)};
  p.circuit = tree_circuit(levels, R, [&](Circuit& c, int level, int kept, int measured) {
    const Basis basis = config.bases[static_cast<std::size_t>(level - 1)];
    if (basis == Basis::Z) {
      c.elements.push_back(HApply{HKind::CNOT12, kept, measured});
    } else {
      c.elements.push_back(HApply{HKind::CNOT21, kept, measured});
    }
    c.elements.push_back(Measure{measured, basis});
  });
  return p;
}

Estimate run_pumping(const PumpingConfig& config, const BaselineParams& params,
                     std::uint64_t samples, std::uint64_t seed, int threads) {
  const auto p = pumping(config, params);
  return estimate(p.circuit, p.config, samples, seed, threads);
}

Estimate run_nested(const NestedConfig& config, const BaselineParams& params,
                    std::uint64_t samples, std::uint64_t seed, int threads) {
  const auto p = nested(config, params);
  return estimate(p.circuit, p.config, samples, seed, threads);
}

Estimate run_sequence(const SequenceConfig& config, const BaselineParams& params,
                      std::uint64_t samples, std::uint64_t seed, int threads) {
  const auto p = sequence(config, params);
  return estimate(p.circuit, p.config, samples, seed, threads);
}

}  // namespace ghzsim
