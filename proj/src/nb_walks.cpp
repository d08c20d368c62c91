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

#include "izeta/nb_walks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "izeta/chebyshev.hpp"
#include "izeta/errors.hpp"

namespace izeta {

namespace {

void require_regular(const Graph& g, int d) {
  const auto rd = g.regular_degree();
  if (!rd || *rd != d)
    throw std::invalid_argument("graph is not " + std::to_string(d) +
                                "-regular");
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
}

// Moebius function on 1..kmax by sieve.
std::vector<int> moebius_table(int kmax) {
  std::vector<int> mu(kmax + 1, 1);
  std::vector<bool> composite(kmax + 1, false);
  std::vector<int> primes;
  for (int i = 2; i <= kmax; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      if (static_cast<long long>(i) * p > kmax) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

struct EdgeAdjacency {
  std::vector<DirectedEdge> des;
  std::vector<std::vector<int>> out; // origin vertex -> ascending edge indices
};

EdgeAdjacency edge_adjacency(const Graph& g) {
  EdgeAdjacency ea{directed_edges(g), {}};
  ea.out.resize(g.vertex_count());
  for (const DirectedEdge& e : ea.des) ea.out[e.origin].push_back(e.index);
  return ea;
}

void check_budget(const Graph& g, int k, std::uint64_t budget) {
  BigInt estimate = 2 * g.edge_count();
  const int branch = std::max(g.max_degree() - 1, 1);
  for (int i = 1; i < k; ++i) estimate *= branch;
  if (estimate > budget)
    throw OracleBudgetError(
        "walk enumeration refused: estimated " + estimate.str() +
        " steps exceeds budget " + std::to_string(budget));
}

} // namespace

NBMatrixSequence nb_matrices(const Graph& g, int d, int kmax) {
  require_regular(g, d);
  if (kmax < 0) throw std::invalid_argument("nb_matrices: kmax must be >= 0");
  NBMatrixSequence seq{d, {}};
  seq.a.reserve(kmax + 1);
  const std::size_t n = g.vertex_count();
  seq.a.push_back(IntMatrix::identity(n));
  if (kmax >= 1) seq.a.push_back(adjacency_matrix(g));
  if (kmax >= 2) {
    IntMatrix a2 = seq.a[1] * seq.a[1];
    for (std::size_t i = 0; i < n; ++i) a2(i, i) -= d;
    seq.a.push_back(std::move(a2));
  }
  for (int k = 3; k <= kmax; ++k)
    seq.a.push_back(seq.a[k - 1] * seq.a[1] - seq.a[k - 2] * BigInt(d - 1));
  return seq;
}

std::vector<BigInt> m_sequence(const NBMatrixSequence& seq) {
  std::vector<BigInt> m;
  m.reserve(seq.a.size());
  for (const IntMatrix& a : seq.a) m.push_back(a.trace());
  return m;
}

BigInt n_from_lemma(const std::vector<BigInt>& m, int d, int k) {
  if (k < 1) throw std::invalid_argument("n_from_lemma: k must be >= 1");
  if (k <= 2) return 0;
  if (static_cast<std::size_t>(k) >= m.size())
    throw std::invalid_argument("n_from_lemma: M table too short");
  BigInt tail(0);
  for (int j = k - 2; j >= 1; j -= 2) tail += m[j];
  return m[k] - BigInt(d - 2) * tail;
}

bool tail_decomposition_check(const std::vector<BigInt>& n,
                              const std::vector<BigInt>& m, int d, int k) {
  if (k < 3) throw std::invalid_argument("tail_decomposition_check: k >= 3");
  if (static_cast<std::size_t>(k) >= n.size() ||
      static_cast<std::size_t>(k) >= m.size())
    throw std::invalid_argument("tail_decomposition_check: tables too short");
  BigInt rhs = n[k];
  BigInt factor(d - 2);
  for (int r = 1; 2 * r <= k; ++r) {
    const int idx = k - 2 * r;
    if (idx >= 3) rhs += factor * n[idx]; // N_j = 0 for j <= 2
    factor *= d - 1;
  }
  return m[k] == rhs;
}

std::vector<BigInt> n_from_hashimoto(const Graph& g, int kmax) {
  if (kmax < 0) throw std::invalid_argument("n_from_hashimoto: kmax >= 0");
  std::vector<BigInt> n(kmax + 1, BigInt(0));
  const IntMatrix h = hashimoto_matrix(g);
  IntMatrix power = h;
  for (int k = 1; k <= kmax; ++k) {
    n[k] = power.trace();
    if (k < kmax) power = power * h;
  }
  return n;
}

std::vector<BigInt> n_from_chebyshev(const Graph& g, int d, int kmax) {
  require_regular(g, d);
  if (kmax < 0) throw std::invalid_argument("n_from_chebyshev: kmax >= 0");
  std::vector<BigInt> n(kmax + 1, BigInt(0));
  const IntMatrix a = adjacency_matrix(g);
  const BigInt even_shift = BigInt(g.vertex_count()) * (d - 2);
  for (int k = 3; k <= kmax; ++k) {
    const IntPolynomial fk = dilated({d - 1, DilatedKind::F}, k);
    n[k] = poly_eval_matrix(fk, a).trace();
    if (k % 2 == 0) n[k] += even_shift;
  }
  return n;
}

BigInt walk_oracle(const Graph& g, int k, WalkMode mode,
                   std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("walk_oracle: k must be >= 1");
  check_budget(g, k, budget);
  const EdgeAdjacency ea = edge_adjacency(g);
  std::uint64_t steps = 0;
  unsigned long long count = 0;

  // Walks are sequences e_1..e_k of directed edges with
  // terminus(e_i) = origin(e_{i+1}) and e_{i+1} != inverse(e_i); closed when
  // terminus(e_k) = origin(e_1), tailless when additionally
  // e_1 != inverse(e_k).
  int root_origin = 0, first_edge = 0;
  auto dfs = [&](auto&& self, int edge, int depth) -> void {
    if (++steps > budget)
      throw OracleBudgetError("walk enumeration exceeded budget");
    const DirectedEdge& e = ea.des[edge];
    if (depth == k) {
      if (e.terminus != root_origin) return;
      if (mode == WalkMode::tailless_cycles && e.inverse == first_edge) return;
      ++count;
      return;
    }
    for (int next : ea.out[e.terminus])
      if (next != e.inverse) self(self, next, depth + 1);
  };
  for (const DirectedEdge& e : ea.des) {
    root_origin = e.origin;
    first_edge = e.index;
    dfs(dfs, e.index, 1);
  }
  return BigInt(count);
}

std::vector<BigInt> prime_counts(const std::vector<BigInt>& n) {
  if (n.empty()) throw std::invalid_argument("prime_counts: empty table");
  const int kmax = static_cast<int>(n.size()) - 1;
  const std::vector<int> mu = moebius_table(kmax);
  std::vector<BigInt> pi(kmax + 1, BigInt(0));
  for (int l = 1; l <= kmax; ++l) {
    BigInt acc(0);
    for (int j = 1; j <= l; ++j) {
      if (l % j != 0) continue;
      const int quotient = l / j;
      if (mu[quotient] != 0) acc += BigInt(mu[quotient]) * n[j];
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(acc, BigInt(l), q, r);
    if (r != 0 || q < 0)
      throw ConsistencyError("prime_counts: pi_" + std::to_string(l) +
                             " is not a nonnegative integer (N table is "
                             "inconsistent)");
    pi[l] = q;
  }
  return pi;
}

std::vector<BigInt> prime_oracle(const Graph& g, int kmax,
                                 std::uint64_t budget) {
  if (kmax < 1) throw std::invalid_argument("prime_oracle: kmax must be >= 1");
  {
    // Combined estimate over all lengths.
    BigInt estimate = 0;
    BigInt per_length = 2 * g.edge_count();
    const int branch = std::max(g.max_degree() - 1, 1);
    for (int k = 1; k <= kmax; ++k) {
      estimate += per_length;
      per_length *= branch;
    }
    if (estimate > budget)
      throw OracleBudgetError(
          "prime enumeration refused: estimated " + estimate.str() +
          " steps exceeds budget " + std::to_string(budget));
  }
  const EdgeAdjacency ea = edge_adjacency(g);
  std::uint64_t steps = 0;
  std::vector<BigInt> pi(kmax + 1, BigInt(0));

  std::vector<int> walk;
  std::set<std::vector<int>> classes;

  auto minimal_period = [](const std::vector<int>& w) {
    const int len = static_cast<int>(w.size());
    for (int p = 1; p < len; ++p) {
      if (len % p != 0) continue;
      bool periodic = true;
      for (int i = p; i < len && periodic; ++i) periodic = w[i] == w[i - p];
      if (periodic) return p;
    }
    return len;
  };
  auto canonical_rotation = [](const std::vector<int>& w) {
    std::vector<int> best = w;
    std::vector<int> rot = w;
    for (std::size_t j = 1; j < w.size(); ++j) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    return best;
  };

  for (int len = 1; len <= kmax; ++len) {
    classes.clear();
    int root_origin = 0, first_edge = 0;
    auto dfs = [&](auto&& self, int edge, int depth) -> void {
      if (++steps > budget)
        throw OracleBudgetError("prime enumeration exceeded budget");
      const DirectedEdge& e = ea.des[edge];
      walk.push_back(edge);
      if (depth == len) {
        if (e.terminus == root_origin && e.inverse != first_edge) {
          // Keep only primitive cycles; each class is the orbit of a
          // primitive cycle under rotation.
          if (minimal_period(walk) == len)
            classes.insert(canonical_rotation(walk));
        }
      } else {
        for (int next : ea.out[e.terminus])
          if (next != e.inverse) self(self, next, depth + 1);
      }
      walk.pop_back();
    };
    for (const DirectedEdge& e : ea.des) {
      root_origin = e.origin;
      first_edge = e.index;
      dfs(dfs, e.index, 1);
    }
    pi[len] = BigInt(classes.size());
  }
  return pi;
}

CountTable count_table(const Graph& g, int kmax) {
  if (kmax < 1) throw std::invalid_argument("count_table: kmax must be >= 1");
  CountTable t;
  t.kmax = kmax;
  t.n = n_from_hashimoto(g, kmax);
  t.pi = prime_counts(t.n);
  if (const auto d = g.regular_degree(); d && *d >= 2)
    t.m = m_sequence(nb_matrices(g, *d, kmax));
  return t;
}

} // namespace izeta
