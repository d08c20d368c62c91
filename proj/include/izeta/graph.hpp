// Copyright 2026 The izeta Authors
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

#ifndef IZETA_GRAPH_HPP
#define IZETA_GRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "izeta/errors.hpp"
#include "izeta/int_matrix.hpp"

namespace izeta {

// One orientation of an undirected edge. The two orientations of undirected
// edge i are the directed edges 2i (low->high endpoint) and 2i+1, so
// inverse pairing is the fixed-point-free involution 2i <-> 2i+1.
struct DirectedEdge {
  int index;
  int origin;
  int terminus;
  int inverse;
};

// Simple undirected graph: validated edge list over vertices 0..n-1.
// Self-loops and duplicate (or reversed-duplicate) edges are rejected at
// construction. Immutable afterwards.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Edges normalized to (low, high), in input order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int v) const { return degrees_.at(v); }
  const std::vector<int>& degrees() const { return degrees_; }
  int min_degree() const;
  int max_degree() const;
  // The common degree d when the graph is regular, empty otherwise.
  std::optional<int> regular_degree() const;
  bool is_connected() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degrees_;
};

// Parses the plain text graph format: '#' comment lines ignored, first
// significant line "<n> <m>", then exactly m lines "<u> <v>".
Graph parse_graph(std::string_view text);

// Emits the same format (normalized endpoints, stored edge order).
std::string format_graph(const Graph& g);

// Symmetric 0/1 matrix with zero diagonal.
IntMatrix adjacency_matrix(const Graph& g);

// All 2|E| directed edges in canonical order.
std::vector<DirectedEdge> directed_edges(const Graph& g);

// Hashimoto edge incidence matrix: entry (i,j) = 1 iff directed edge j
// extends directed edge i without backtracking, i.e.
// terminus(e_i) = origin(e_j) and e_j != inverse(e_i).
IntMatrix hashimoto_matrix(const Graph& g);

} // namespace izeta

#endif // IZETA_GRAPH_HPP
