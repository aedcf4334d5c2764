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

#include <gtest/gtest.h>

#include <filesystem>

#include "ghzsim/circuit_io.hpp"

namespace ghzsim {
namespace {

Circuit sample_circuit() {
  return Circuit{{
      HApply{HKind::DCX21, 0, 1},
      BApply{BGate::from_code(6, 1, 3), 1, 0},
      PauliOp{0, 2, Pauli::Y},
      Twirl{0},
      Measure{1, Basis::X},
      Refill{1},
      Measure{1, Basis::Z},
  }};
}

CircuitConfig sample_config() {
  CircuitConfig c;
  c.n = 3;
  c.N = 3;
  c.K = 1;
  c.R = 2;
  return c;
}

TEST(CircuitIo, RoundTripsEveryElementKind) {
  const auto text = serialize_circuit(sample_circuit(), sample_config());
  const auto file = parse_circuit(text);
  EXPECT_EQ(file.circuit, sample_circuit());
  EXPECT_EQ(file.n, 3);
  EXPECT_EQ(file.N, 3);
  EXPECT_EQ(file.K, 1);
  EXPECT_EQ(file.R, 2);
  CircuitConfig c;
  file.apply_shape(c);
  EXPECT_EQ(c.N, 3);
  EXPECT_EQ(serialize_circuit(file.circuit, c), text);
}

TEST(CircuitIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "ghzsim_circuit_io_test.json";
  save_circuit_file(path, sample_circuit(), sample_config());
  EXPECT_EQ(load_circuit_file(path).circuit, sample_circuit());
  std::filesystem::remove(path);
  EXPECT_THROW(load_circuit_file(path), CircuitParseError);
}

std::optional<std::size_t> error_element(const std::string& text) {
  try {
    parse_circuit(text);
  } catch (const CircuitParseError& e) {
    return e.element();
  }
  ADD_FAILURE() << "no error for " << text;
  return std::nullopt;
}

TEST(CircuitIo, ErrorsNameTheOffendingElement) {
  const std::string head = R"({"version":1,"n":3,"N":2,"K":1,"R":2,"elements":[)";
  const std::string ok = R"({"kind":"H","gate":"CNOT12","a":0,"b":1},)";
  EXPECT_EQ(error_element(head + ok + R"({"kind":"H","gate":"CNOT13","a":0,"b":1}]})"), 1u);
  EXPECT_EQ(error_element(head + ok + ok + R"({"kind":"Measure","copy":1,"basis":"Y"}]})"), 2u);
  EXPECT_EQ(error_element(head + R"({"kind":"B","gate":"CZ","nodes":[1],"a":0,"b":1}]})"), 0u);
  EXPECT_EQ(error_element(head + R"({"kind":"Pauli","copy":0,"qubit":1,"pauli":"XY"}]})"), 0u);
  EXPECT_EQ(error_element(head + R"({"kind":"Refill","slot":"one"}]})"), 0u);
  EXPECT_EQ(error_element(head + R"({"kind":"Swap"}]})"), 0u);
  EXPECT_EQ(error_element(head + R"(3]})"), 0u);
}

TEST(CircuitIo, DocumentLevelErrors) {
  EXPECT_FALSE(error_element("{not json").has_value());
  EXPECT_FALSE(error_element("[]").has_value());
  EXPECT_FALSE(error_element(R"({"version":2,"n":3,"N":2,"K":1,"R":2,"elements":[]})").has_value());
  EXPECT_FALSE(error_element(R"({"version":1,"n":3,"N":2,"K":1,"R":2})").has_value());
  EXPECT_FALSE(error_element(R"({"version":1,"N":2,"K":1,"R":2,"elements":[]})").has_value());
}

}  // namespace
}  // namespace ghzsim
