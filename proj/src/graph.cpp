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

#include "izeta/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace izeta {

namespace {

std::string edge_str(int u, int v) {
  std::ostringstream out;
  out << "{" << u << "," << v << "}";
  return out.str();
}

} // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw GraphError(GraphErrorKind::malformed, "negative vertex count");
  degrees_.assign(n_, 0);
  edges_.reserve(edges.size());
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw GraphError(GraphErrorKind::index_out_of_range,
                       "edge " + edge_str(u, v) + " out of range [0," +
                           std::to_string(n_) + ")");
    if (u == v)
      throw GraphError(GraphErrorKind::self_loop,
                       "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw GraphError(GraphErrorKind::duplicate_edge,
                       "duplicate edge " + edge_str(u, v));
    edges_.emplace_back(u, v);
    ++degrees_[u];
    ++degrees_[v];
  }
}

int Graph::min_degree() const {
  return degrees_.empty() ? 0
                          : *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const {
  return degrees_.empty() ? 0
                          : *std::max_element(degrees_.begin(), degrees_.end());
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const int d = degrees_[0];
  for (int dv : degrees_)
    if (dv != d) return std::nullopt;
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<std::vector<int>> adj(n_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> visited(n_, false);
  std::vector<int> stack{0};
  visited[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!visited[w]) {
        visited[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::pair<int, int>> edges;

  auto parse_two = [](const std::string& s, long long& a, long long& b) {
    std::istringstream ls(s);
    std::string extra;
    if (!(ls >> a >> b)) return false;
    if (ls >> extra) return false;
    return true;
  };

  while (std::getline(in, line)) {
    // '#' starts a comment line; whitespace-only lines are skipped too.
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    long long a = 0, b = 0;
    if (!parse_two(line, a, b))
      throw GraphError(GraphErrorKind::malformed,
                       "expected two integers, got: \"" + line + "\"");
    if (!have_header) {
      if (a < 0 || b < 0)
        throw GraphError(GraphErrorKind::malformed,
                         "vertex/edge counts must be nonnegative");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw GraphError(GraphErrorKind::count_mismatch,
                       "more than the declared " + std::to_string(m) +
                           " edges");
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw GraphError(GraphErrorKind::index_out_of_range,
                       "edge " + edge_str(static_cast<int>(a),
                                          static_cast<int>(b)) +
                           " out of range [0," + std::to_string(n) + ")");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!have_header)
    throw GraphError(GraphErrorKind::malformed, "missing \"<n> <m>\" header");
  if (static_cast<long long>(edges.size()) != m)
    throw GraphError(GraphErrorKind::count_mismatch,
                     "declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

std::vector<DirectedEdge> directed_edges(const Graph& g) {
  std::vector<DirectedEdge> out;
  out.reserve(2 * g.edges().size());
  int i = 0;
  for (auto [u, v] : g.edges()) {
    out.push_back({2 * i, u, v, 2 * i + 1});
    out.push_back({2 * i + 1, v, u, 2 * i});
    ++i;
  }
  return out;
}

IntMatrix hashimoto_matrix(const Graph& g) {
  const auto des = directed_edges(g);
  const int m = static_cast<int>(des.size());
  std::vector<std::vector<int>> out_edges(g.vertex_count());
  for (const DirectedEdge& e : des) out_edges[e.origin].push_back(e.index);
  IntMatrix h(m, m);
  for (const DirectedEdge& e : des)
    for (int j : out_edges[e.terminus])
      if (j != e.inverse) h(e.index, j) = 1;
  return h;
}

} // namespace izeta
