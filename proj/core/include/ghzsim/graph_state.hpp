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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghzsim/clifford_map.hpp"
#include "ghzsim/tableau.hpp"

namespace ghzsim {

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  explicit Graph(int vertices = 0);

  static Graph complete(int n);
  static Graph star(int n, int center = 1);
  /// One "u v" pair per line; blank lines and '#' comments are skipped.
  /// The vertex count is the largest label seen.
  static Graph parse_edge_list(std::string_view text);

  int vertices() const { return n_; }
  void add_edge(int u, int v);
  void toggle_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  int n_;
  std::vector<char> adjacency_;
};

/// Row v is X_v times Z_u for every neighbor u.
StabilizerTableau graph_stabilizers(const Graph& graph);

/// Complements the edges among the neighbors of `vertex`.
Graph local_complement(const Graph& graph, int vertex);

/// Rows X...X and Z_i Z_{i+1}.
StabilizerTableau ghz_stabilizers(int n);

/// A single-qubit Clifford applied to one vertex.
struct LocalStep {
  int vertex;
  std::string label;  ///< "H", "sqrt(-iX)", "sqrt(iZ)"
  CliffordMap gate;   ///< one-qubit map
};

/// Ordered single-qubit steps; each acts on one vertex only.
struct LocalBasisChange {
  int n = 0;
  std::vector<LocalStep> steps;

  CliffordMap to_map() const;
  /// Vertices carrying a step with the given label, ascending.
  std::vector<int> vertices_with(std::string_view label) const;
};

LocalStep hadamard_step(int vertex);
LocalStep sqrt_minus_ix_step(int vertex);
LocalStep sqrt_iz_step(int vertex);

/// Single-qubit corrections realizing local complementation at `vertex`:
/// sqrt(-iX) on the vertex and sqrt(iZ) on each neighbor.
LocalBasisChange local_complement_unitary(const Graph& graph, int vertex);

/// Hadamards on every leaf of the star centered at `center`.
LocalBasisChange star_to_ghz(int n, int center = 1);

struct CompleteToGhz {
  int lc_vertex;
  LocalBasisChange change;  ///< LC corrections followed by star_to_ghz
};
CompleteToGhz complete_to_ghz(int n);

/// Whether conjugating the graph's stabilizers by the change yields the
/// GHZ stabilizer group exactly (row spaces equal, signs included).
bool verify_ghz_conversion(const Graph& graph, const LocalBasisChange& change);

struct Conversion {
  bool ghz_equivalent = false;
  std::optional<int> lc_vertex;
  LocalBasisChange change;
  bool verified = false;
  std::string recipe;  ///< e.g. "LC at 1; H at 2,3; verified"
};

/// Recognizes stars (any center) and complete graphs, the graphs locally
/// equivalent to GHZ, and builds and verifies the local conversion.
Conversion convert_to_ghz(const Graph& graph);

}  // namespace ghzsim
