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

#include "izeta/generators.hpp"

#include <set>
#include <stdexcept>

namespace izeta {

Graph generate_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph generate_complete(int n) {
  if (n < 2) throw std::invalid_argument("complete: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph generate_complete_bipartite(int a, int b) {
  if (a != b)
    throw std::invalid_argument(
        "complete_bipartite: parts must be equal (irregular graphs are not "
        "generated)");
  if (a < 1) throw std::invalid_argument("complete_bipartite: parts must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph generate_petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5); // outer cycle
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i);       // spokes
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return Graph(10, std::move(edges));
}

Graph generate_hypercube(int r) {
  if (r < 1) throw std::invalid_argument("hypercube: r must be >= 1");
  if (r > 20) throw std::invalid_argument("hypercube: r too large (max 20)");
  const int n = 1 << r;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < r; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(n, std::move(edges));
}

Graph generate_circular_ladder(int n) {
  if (n < 3) throw std::invalid_argument("circular_ladder: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i); // rungs
  return Graph(2 * n, std::move(edges));
}

Graph generate_circulant(int n, const std::vector<int>& offsets) {
  if (n < 3) throw std::invalid_argument("circulant: n must be >= 3");
  if (offsets.empty())
    throw std::invalid_argument("circulant: need at least one offset");
  std::set<int> seen;
  for (int s : offsets) {
    if (s < 1 || 2 * s > n)
      throw std::invalid_argument(
          "circulant: offsets must lie in [1, n/2] (offset " +
          std::to_string(s) + " would produce loops or duplicates)");
    if (!seen.insert(s).second)
      throw std::invalid_argument("circulant: duplicate offset " +
                                  std::to_string(s));
  }
  std::vector<std::pair<int, int>> edges;
  for (int s : offsets) {
    // Offset n/2 is the antipodal matching: each edge appears once.
    const int span = (2 * s == n) ? n / 2 : n;
    for (int i = 0; i < span; ++i) edges.emplace_back(i, (i + s) % n);
  }
  return Graph(n, std::move(edges));
}

Graph generate(const std::string& family, const std::vector<int>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(family + ": expected " + std::to_string(k) +
                                  " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  if (family == "cycle") {
    want(1);
    return generate_cycle(params[0]);
  }
  if (family == "complete") {
    want(1);
    return generate_complete(params[0]);
  }
  if (family == "complete_bipartite") {
    if (params.size() == 1) return generate_complete_bipartite(params[0], params[0]);
    want(2);
    return generate_complete_bipartite(params[0], params[1]);
  }
  if (family == "petersen") {
    want(0);
    return generate_petersen();
  }
  if (family == "hypercube") {
    want(1);
    return generate_hypercube(params[0]);
  }
  if (family == "circular_ladder") {
    want(1);
    return generate_circular_ladder(params[0]);
  }
  if (family == "circulant") {
    if (params.size() < 2)
      throw std::invalid_argument("circulant: expected <n> <offset>...");
    return generate_circulant(params[0],
                              {params.begin() + 1, params.end()});
  }
  throw std::invalid_argument("unknown family: " + family);
}

} // namespace izeta
