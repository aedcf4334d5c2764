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

#include "ghzsim/circuit.hpp"

#include <stdexcept>

#include "overloaded.hpp"

namespace ghzsim {

using detail::Overloaded;

void CircuitConfig::validate() const {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("n must lie in [2, " + std::to_string(kMaxQubits) + "]");
  }
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (K < 1 || K > N) throw std::invalid_argument("K must satisfy 1 <= K <= N");
  if (R < 2) throw std::invalid_argument("R must be at least 2");
  if (K > R) throw std::invalid_argument("K must not exceed R");
  if (R > 16) throw std::invalid_argument("R must not exceed 16");
  if (!(f_in >= 0.0 && f_in <= 1.0)) throw std::invalid_argument("f_in must lie in [0, 1]");
  noise.validate();
}

std::string to_string(const Element& element) {
  return std::visit(
      Overloaded{
          [](const HApply& e) {
            return "H:" + std::string(name(e.kind)) + "(" + std::to_string(e.a) + "," +
                   std::to_string(e.b) + ")";
          },
          [](const BApply& e) {
            return to_string(GateDescriptor{e.gate}) + "(" + std::to_string(e.a) + "," +
                   std::to_string(e.b) + ")";
          },
          [](const PauliOp& e) {
            return std::string("P:") + to_char(e.pauli) + std::to_string(e.qubit) + "(" +
                   std::to_string(e.copy) + ")";
          },
          [](const Measure& e) {
            return std::string("M:") + to_char(e.basis) + "(" + std::to_string(e.copy) + ")";
          },
          [](const Refill& e) { return "Refill(" + std::to_string(e.slot) + ")"; },
          [](const Twirl& e) { return "Twirl(" + std::to_string(e.copy) + ")"; },
      },
      element);
}

std::vector<Violation> validate(const Circuit& circuit, const CircuitConfig& config) {
  std::vector<Violation> out;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    out.push_back({circuit.elements.size(), "config", e.what()});
    return out;
  }
  std::vector<char> live(static_cast<std::size_t>(config.R), 0);
  for (int s = 0; s < config.initial_fill(); ++s) live[static_cast<std::size_t>(s)] = 1;
  int sampled = config.initial_fill();

  auto in_range = [&](int slot) { return slot >= 0 && slot < config.R; };
  for (std::size_t i = 0; i < circuit.elements.size(); ++i) {
    auto fail = [&](std::string rule, std::string message) {
      out.push_back({i, std::move(rule), std::move(message)});
    };
    auto need_live = [&](int slot) {
      if (!in_range(slot)) {
        fail("slot-range", "slot " + std::to_string(slot) + " outside register");
        return false;
      }
      if (!live[static_cast<std::size_t>(slot)]) {
        fail("dead-copy", "slot " + std::to_string(slot) + " holds no live copy");
        return false;
      }
      return true;
    };
    auto need_pair = [&](int a, int b) {
      const bool ok_a = need_live(a);
      const bool ok_b = need_live(b);
      if (ok_a && ok_b && a == b) fail("same-copy", "gate operands must differ");
    };
    std::visit(Overloaded{
                   [&](const HApply& e) { need_pair(e.a, e.b); },
                   [&](const BApply& e) {
                     need_pair(e.a, e.b);
                     try {
                       check_gate(GateDescriptor{e.gate}, config.n);
                     } catch (const std::invalid_argument& ex) {
                       fail("node-pair", ex.what());
                     }
                   },
                   [&](const PauliOp& e) {
                     need_live(e.copy);
                     if (e.qubit < 1 || e.qubit > config.n) {
                       fail("qubit-range", "qubit " + std::to_string(e.qubit) + " outside [1, n]");
                     }
                   },
                   [&](const Measure& e) {
                     if (need_live(e.copy)) live[static_cast<std::size_t>(e.copy)] = 0;
                   },
                   [&](const Refill& e) {
                     if (!in_range(e.slot) || live[static_cast<std::size_t>(e.slot)]) {
                       fail("register-overflow", "refill of slot " + std::to_string(e.slot) +
                                                     " exceeds the register of " +
                                                     std::to_string(config.R));
                       return;
                     }
                     if (sampled >= config.N) {
                       fail("budget", "refill exceeds the raw-state budget N = " +
                                          std::to_string(config.N));
                       return;
                     }
                     live[static_cast<std::size_t>(e.slot)] = 1;
                     ++sampled;
                   },
                   [&](const Twirl& e) { need_live(e.copy); },
               },
               circuit.elements[i]);
  }
  const std::size_t end = circuit.elements.size();
  if (sampled != config.N) {
    out.push_back({end, "budget",
                   "circuit consumes " + std::to_string(sampled) + " raw copies, expected " +
                       std::to_string(config.N)});
  }
  int survivors = 0;
  for (char l : live) survivors += l ? 1 : 0;
  if (survivors != config.K) {
    out.push_back({end, "outputs",
                   std::to_string(survivors) + " copies survive, expected " +
                       std::to_string(config.K)});
  }
  return out;
}

void require_valid(const Circuit& circuit, const CircuitConfig& config) {
  const auto violations = validate(circuit, config);
  if (violations.empty()) return;
  std::string message = "invalid circuit:";
  for (const auto& v : violations) {
    message += "\n  element " + std::to_string(v.index) + " [" + v.rule + "]: " + v.message;
  }
  throw std::invalid_argument(message);
}

}  // namespace ghzsim
