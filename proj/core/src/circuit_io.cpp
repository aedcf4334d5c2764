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

#include "ghzsim/circuit_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "overloaded.hpp"

namespace ghzsim {

using detail::Overloaded;
using nlohmann::json;

namespace {

int get_int(const json& j, const char* key, std::optional<std::size_t> element) {
  if (!j.contains(key)) throw CircuitParseError(std::string("missing field '") + key + "'", element);
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw CircuitParseError(std::string("field '") + key + "' must be an integer", element);
  }
  return v.get<int>();
}

std::string get_string(const json& j, const char* key, std::size_t element) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw CircuitParseError(std::string("field '") + key + "' must be a string", element);
  }
  return j.at(key).get<std::string>();
}

Element parse_element(const json& j, std::size_t i) {
  if (!j.is_object()) throw CircuitParseError("element must be an object", i);
  const std::string kind = get_string(j, "kind", i);
  if (kind == "H") {
    const auto h = parse_hkind(get_string(j, "gate", i));
    if (!h) throw CircuitParseError("unknown H gate", i);
    return HApply{*h, get_int(j, "a", i), get_int(j, "b", i)};
  }
  if (kind == "B") {
    const auto code = parse_b_code(get_string(j, "gate", i));
    if (!code) throw CircuitParseError("unknown B gate", i);
    if (!j.contains("nodes") || !j.at("nodes").is_array() || j.at("nodes").size() != 2 ||
        !j.at("nodes")[0].is_number_integer() || !j.at("nodes")[1].is_number_integer()) {
      throw CircuitParseError("field 'nodes' must be a pair of integers", i);
    }
    const int ni = j.at("nodes")[0].get<int>();
    const int nj = j.at("nodes")[1].get<int>();
    return BApply{BGate::from_code(*code, ni, nj), get_int(j, "a", i), get_int(j, "b", i)};
  }
  if (kind == "Pauli") {
    const std::string p = get_string(j, "pauli", i);
    if (p.size() != 1) throw CircuitParseError("field 'pauli' must be one letter", i);
    try {
      return PauliOp{get_int(j, "copy", i), get_int(j, "qubit", i), parse_pauli(p[0])};
    } catch (const std::invalid_argument& e) {
      throw CircuitParseError(e.what(), i);
    }
  }
  if (kind == "Measure") {
    try {
      return Measure{get_int(j, "copy", i), parse_basis(get_string(j, "basis", i))};
    } catch (const std::invalid_argument& e) {
      throw CircuitParseError(e.what(), i);
    }
  }
  if (kind == "Refill") return Refill{get_int(j, "slot", i)};
  if (kind == "Twirl") return Twirl{get_int(j, "copy", i)};
  throw CircuitParseError("unknown element kind '" + kind + "'", i);
}

json element_json(const Element& element) {
  return std::visit(
      Overloaded{
          [](const HApply& e) {
            return json{{"kind", "H"}, {"gate", std::string(name(e.kind))}, {"a", e.a}, {"b", e.b}};
          },
          [](const BApply& e) {
            return json{{"kind", "B"},
                        {"gate", std::string(b_code_name(e.gate.code()))},
                        {"nodes", {e.gate.node_i, e.gate.node_j}},
                        {"a", e.a},
                        {"b", e.b}};
          },
          [](const PauliOp& e) {
            return json{{"kind", "Pauli"},
                        {"copy", e.copy},
                        {"qubit", e.qubit},
                        {"pauli", std::string(1, to_char(e.pauli))}};
          },
          [](const Measure& e) {
            return json{{"kind", "Measure"}, {"copy", e.copy}, {"basis", std::string(1, to_char(e.basis))}};
          },
          [](const Refill& e) { return json{{"kind", "Refill"}, {"slot", e.slot}}; },
          [](const Twirl& e) { return json{{"kind", "Twirl"}, {"copy", e.copy}}; },
      },
      element);
}

}  // namespace

CircuitParseError::CircuitParseError(const std::string& message, std::optional<std::size_t> element)
    : std::runtime_error(element ? "element " + std::to_string(*element) + ": " + message : message),
      element_(element) {}

void CircuitFile::apply_shape(CircuitConfig& config) const {
  config.n = n;
  config.N = N;
  config.K = K;
  config.R = R;
}

CircuitFile parse_circuit(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CircuitParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CircuitParseError("circuit document must be an object");
  const int version = get_int(doc, "version", std::nullopt);
  if (version != kCircuitFileVersion) {
    throw CircuitParseError("unsupported circuit version " + std::to_string(version));
  }
  CircuitFile out;
  out.n = get_int(doc, "n", std::nullopt);
  out.N = get_int(doc, "N", std::nullopt);
  out.K = get_int(doc, "K", std::nullopt);
  out.R = get_int(doc, "R", std::nullopt);
  if (!doc.contains("elements") || !doc.at("elements").is_array()) {
    throw CircuitParseError("field 'elements' must be an array");
  }
  const auto& elements = doc.at("elements");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out.circuit.elements.push_back(parse_element(elements[i], i));
  }
  return out;
}

std::string serialize_circuit(const Circuit& circuit, const CircuitConfig& config) {
  json elements = json::array();
  for (const auto& e : circuit.elements) elements.push_back(element_json(e));
  json doc{{"version", kCircuitFileVersion},
           {"n", config.n},
           {"N", config.N},
           {"K", config.K},
           {"R", config.R},
           {"elements", std::move(elements)}};
  return doc.dump(2) + "\n";
}

CircuitFile load_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CircuitParseError("cannot open circuit file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_circuit(text.str());
}

void save_circuit_file(const std::filesystem::path& path, const Circuit& circuit,
                       const CircuitConfig& config) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit file " + path.string());
  out << serialize_circuit(circuit, config);
}

}  // namespace ghzsim
