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

#include "ghzsim/graph_state.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace ghzsim {

namespace {

CliffordMap one_qubit(Pauli x_image, int x_phase, Pauli z_image, int z_phase) {
  auto x = PauliString::single(1, 0, x_image);
  auto z = PauliString::single(1, 0, z_image);
  x.phase = x_phase;
  z.phase = z_phase;
  return CliffordMap({x}, {z});
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::optional<int> star_center(const Graph& g) {
  const int n = g.vertices();
  if (n == 2) return g.has_edge(1, 2) ? std::optional<int>(1) : std::nullopt;
  for (int c = 1; c <= n; ++c) {
    if (g == Graph::star(n, c)) return c;
  }
  return std::nullopt;
}

}  // namespace

Graph::Graph(int vertices)
    : n_(vertices), adjacency_(static_cast<std::size_t>(vertices * vertices), 0) {
  if (vertices < 0 || vertices > kMaxOracleQubits) {
    throw std::invalid_argument("graph size out of range");
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::star(int n, int center) {
  Graph g(n);
  g.check_vertex(center);
  for (int v = 1; v <= n; ++v) {
    if (v != center) g.add_edge(center, v);
  }
  return g;
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    int u = 0, v = 0;
    if (!(fields >> u)) continue;
    std::string rest;
    if (!(fields >> v) || (fields >> rest)) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (u < 1 || v < 1 || u == v) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": invalid edge");
    }
    edges.emplace_back(u, v);
    n = std::max({n, u, v});
  }
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adjacency_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))] = 1;
  adjacency_[static_cast<std::size_t>((v - 1) * n_ + (u - 1))] = 1;
}

void Graph::toggle_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  auto& a = adjacency_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))];
  a = a ? 0 : 1;
  adjacency_[static_cast<std::size_t>((v - 1) * n_ + (u - 1))] = a;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))] != 0;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u) {
    if (u != v && has_edge(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

StabilizerTableau graph_stabilizers(const Graph& graph) {
  const int n = graph.vertices();
  std::vector<PauliString> rows;
  for (int v = 1; v <= n; ++v) {
    PauliString row = PauliString::single(n, v - 1, Pauli::X);
    for (int u : graph.neighbors(v)) row.z |= std::uint64_t{1} << (u - 1);
    rows.push_back(row);
  }
  return StabilizerTableau(n, std::move(rows));
}

Graph local_complement(const Graph& graph, int vertex) {
  Graph out = graph;
  const auto hood = graph.neighbors(vertex);
  for (std::size_t i = 0; i < hood.size(); ++i) {
    for (std::size_t j = i + 1; j < hood.size(); ++j) out.toggle_edge(hood[i], hood[j]);
  }
  return out;
}

StabilizerTableau ghz_stabilizers(int n) {
  if (n < 1) throw std::invalid_argument("GHZ needs at least one qubit");
  std::vector<PauliString> rows;
  PauliString x = PauliString::identity(n);
  x.x = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1u;
  rows.push_back(x);
  for (int k = 0; k + 1 < n; ++k) {
    PauliString zz = PauliString::identity(n);
    zz.z = (std::uint64_t{3}) << k;
    rows.push_back(zz);
  }
  return StabilizerTableau(n, std::move(rows));
}

LocalStep hadamard_step(int vertex) {
  return {vertex, "H", one_qubit(Pauli::Z, 0, Pauli::X, 0)};
}

LocalStep sqrt_minus_ix_step(int vertex) {
  return {vertex, "sqrt(-iX)", one_qubit(Pauli::X, 0, Pauli::Y, 2)};
}

LocalStep sqrt_iz_step(int vertex) {
  return {vertex, "sqrt(iZ)", one_qubit(Pauli::Y, 2, Pauli::Z, 0)};
}

CliffordMap LocalBasisChange::to_map() const {
  CliffordMap out(n);
  for (const auto& step : steps) {
    const std::array<int, 1> position = {step.vertex - 1};
    out = then(out, CliffordMap::embed(step.gate, n, position));
  }
  return out;
}

std::vector<int> LocalBasisChange::vertices_with(std::string_view label) const {
  std::vector<int> out;
  for (const auto& step : steps) {
    if (step.label == label) out.push_back(step.vertex);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LocalBasisChange local_complement_unitary(const Graph& graph, int vertex) {
  LocalBasisChange change{graph.vertices(), {sqrt_minus_ix_step(vertex)}};
  for (int u : graph.neighbors(vertex)) change.steps.push_back(sqrt_iz_step(u));
  return change;
}

LocalBasisChange star_to_ghz(int n, int center) {
  if (n < 2) throw std::invalid_argument("star needs at least two vertices");
  LocalBasisChange change{n, {}};
  for (int v = 1; v <= n; ++v) {
    if (v != center) change.steps.push_back(hadamard_step(v));
  }
  return change;
}

CompleteToGhz complete_to_ghz(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs at least two vertices");
  CompleteToGhz out{1, local_complement_unitary(Graph::complete(n), 1)};
  for (auto& step : star_to_ghz(n, 1).steps) out.change.steps.push_back(std::move(step));
  return out;
}

bool verify_ghz_conversion(const Graph& graph, const LocalBasisChange& change) {
  if (change.n != graph.vertices()) return false;
  const auto converted = conjugate(graph_stabilizers(graph), change.to_map());
  return same_group(ghz_stabilizers(graph.vertices()), converted);
}

Conversion convert_to_ghz(const Graph& graph) {
  Conversion out;
  const int n = graph.vertices();
  if (n < 2) {
    out.recipe = "not GHZ-equivalent";
    return out;
  }
  std::string steps;
  if (const auto center = star_center(graph)) {
    out.change = star_to_ghz(n, *center);
  } else if (n >= 3 && graph == Graph::complete(n)) {
    const auto c = complete_to_ghz(n);
    out.lc_vertex = c.lc_vertex;
    out.change = c.change;
    steps = "LC at " + std::to_string(c.lc_vertex) + "; ";
  } else {
    out.recipe = "not GHZ-equivalent";
    return out;
  }
  out.ghz_equivalent = true;
  out.verified = verify_ghz_conversion(graph, out.change);
  steps += "H at " + join(out.change.vertices_with("H")) + "; ";
  out.recipe = steps + (out.verified ? "verified" : "verification failed");
  return out;
}

}  // namespace ghzsim
