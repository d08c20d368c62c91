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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "izeta/chebyshev.hpp"
#include "izeta/errors.hpp"
#include "izeta/generators.hpp"
#include "izeta/nb_walks.hpp"
#include "test_util.hpp"

using namespace izeta;
using namespace izeta::testutil;

TEST_CASE("nb_matrices base cases") {
  const Graph k4 = generate_complete(4);
  const auto seq = nb_matrices(k4, 3, 4);
  CHECK(seq.a[0] == IntMatrix::identity(4));
  CHECK(seq.a[1] == adjacency_matrix(k4));

  // K4: A_2 = 2A (each adjacent pair has two common neighbors), verified
  // entry-by-entry against exhaustive enumeration.
  CHECK(seq.a[2] == adjacency_matrix(k4) * BigInt(2));
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      CHECK(seq.a[2](u, v) == count_nb_walks(k4, 2, u, v));

  CHECK_THROWS_AS(nb_matrices(k4_minus_edge(), 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(nb_matrices(k4, 2, 4), std::invalid_argument);
}

TEST_CASE("nb_matrices C4: A_2 is twice the antipodal permutation") {
  const Graph c4 = generate_cycle(4);
  const auto seq = nb_matrices(c4, 2, 2);
  IntMatrix antipodal(4, 4);
  for (int i = 0; i < 4; ++i) antipodal(i, (i + 2) % 4) = 1;
  CHECK(seq.a[2] == antipodal * BigInt(2));
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      CHECK(seq.a[2](u, v) == count_nb_walks(c4, 2, u, v));
}

TEST_CASE("nb_matrices entries count non-backtracking walks") {
  for (const Graph& g : {generate_petersen(), generate_hypercube(3)}) {
    const int d = *g.regular_degree();
    const auto seq = nb_matrices(g, d, 5);
    for (int k = 0; k <= 5; ++k)
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
          CHECK(seq.a[k](u, v) == count_nb_walks(g, k, u, v));
  }
}

TEST_CASE("A_k row sums are d(d-1)^{k-1}") {
  for (const Graph& g : {generate_complete(5), generate_petersen()}) {
    const int d = *g.regular_degree();
    const auto seq = nb_matrices(g, d, 6);
    for (int k = 1; k <= 6; ++k) {
      BigInt expect(d);
      for (int i = 1; i < k; ++i) expect *= d - 1;
      for (int u = 0; u < g.vertex_count(); ++u) {
        BigInt row(0);
        for (int v = 0; v < g.vertex_count(); ++v) row += seq.a[k](u, v);
        CHECK(row == expect);
      }
    }
  }
}

TEST_CASE("m_sequence") {
  const Graph k4 = generate_complete(4);
  const auto m = m_sequence(nb_matrices(k4, 3, 3));
  CHECK(m[1] == 0);
  CHECK(m[2] == 0);
  CHECK(m[3] == 24);

  const auto mp = m_sequence(nb_matrices(generate_petersen(), 3, 2));
  CHECK(mp[1] == 0);
  CHECK(mp[2] == 0);
}

TEST_CASE("n_from_lemma") {
  const Graph k4 = generate_complete(4);
  const auto m = m_sequence(nb_matrices(k4, 3, 8));
  CHECK(n_from_lemma(m, 3, 1) == 0);
  CHECK(n_from_lemma(m, 3, 2) == 0);
  // 4 triangles x 3 roots x 2 orientations.
  CHECK(n_from_lemma(m, 3, 3) == 24);
  CHECK(n_from_lemma(m, 3, 3) == walk_oracle(k4, 3, WalkMode::tailless_cycles));

  // d = 2: N_k = M_k because every d-2 factor vanishes.
  const Graph c3 = generate_cycle(3);
  const auto mc = m_sequence(nb_matrices(c3, 2, 6));
  for (int k = 3; k <= 6; ++k) CHECK(n_from_lemma(mc, 2, k) == mc[k]);
  CHECK(n_from_lemma(mc, 2, 3) == 6);

  CHECK_THROWS_AS(n_from_lemma(mc, 2, 7), std::invalid_argument);
}

TEST_CASE("tail_decomposition_check") {
  SUBCASE("d=2 reduces to M_k = N_k") {
    const Graph c5 = generate_cycle(5);
    std::vector<BigInt> n(9, BigInt(0)), m(9, BigInt(0));
    for (int k = 1; k <= 8; ++k) {
      n[k] = walk_oracle(c5, k, WalkMode::tailless_cycles);
      m[k] = walk_oracle(c5, k, WalkMode::closed_nb_walks);
    }
    for (int k = 3; k <= 8; ++k) {
      CHECK(n[k] == m[k]);
      CHECK(tail_decomposition_check(n, m, 2, k));
    }
  }
  SUBCASE("K4 k=5 and Petersen k=8 with oracle tables") {
    for (const auto& [g, kmax] :
         {std::pair{generate_complete(4), 5}, {generate_petersen(), 8}}) {
      std::vector<BigInt> n(kmax + 1, BigInt(0)), m(kmax + 1, BigInt(0));
      for (int k = 1; k <= kmax; ++k) {
        n[k] = walk_oracle(g, k, WalkMode::tailless_cycles);
        m[k] = walk_oracle(g, k, WalkMode::closed_nb_walks);
      }
      for (int k = 3; k <= kmax; ++k)
        CHECK(tail_decomposition_check(n, m, 3, k));
    }
  }
  SUBCASE("detects a corrupted table") {
    const Graph k4 = generate_complete(4);
    std::vector<BigInt> n(6, BigInt(0)), m(6, BigInt(0));
    for (int k = 1; k <= 5; ++k) {
      n[k] = walk_oracle(k4, k, WalkMode::tailless_cycles);
      m[k] = walk_oracle(k4, k, WalkMode::closed_nb_walks);
    }
    n[5] += 1;
    CHECK_FALSE(tail_decomposition_check(n, m, 3, 5));
  }
}

TEST_CASE("n_from_hashimoto") {
  SUBCASE("C3: nonzero only at multiples of 3") {
    const auto n = n_from_hashimoto(generate_cycle(3), 8);
    for (int k = 1; k <= 8; ++k)
      CHECK(n[k] == (k % 3 == 0 ? 6 : 0));
  }
  SUBCASE("K4 and the universal N_1 = N_2 = 0") {
    const auto n = n_from_hashimoto(generate_complete(4), 3);
    CHECK(n[1] == 0);
    CHECK(n[2] == 0);
    CHECK(n[3] == 24);
  }
  SUBCASE("irregular graphs work too") {
    const auto n = n_from_hashimoto(k4_minus_edge(), 6);
    for (int k = 1; k <= 6; ++k)
      CHECK(n[k] == walk_oracle(k4_minus_edge(), k, WalkMode::tailless_cycles));
  }
}

TEST_CASE("n_from_chebyshev") {
  const auto nc3 = n_from_chebyshev(generate_cycle(3), 2, 3);
  CHECK(nc3[3] == 6);
  const auto nk4 = n_from_chebyshev(generate_complete(4), 3, 3);
  CHECK(nk4[1] == 0);
  CHECK(nk4[2] == 0);
  CHECK(nk4[3] == 24);
  CHECK_THROWS_AS(n_from_chebyshev(k4_minus_edge(), 3, 3),
                  std::invalid_argument);
}

TEST_CASE("four-way N_k agreement") {
  for (const Graph& g :
       {generate_cycle(6), generate_complete(4), generate_complete_bipartite(3, 3),
        generate_petersen()}) {
    const int d = *g.regular_degree();
    const int kmax = 10;
    const auto m = m_sequence(nb_matrices(g, d, kmax));
    const auto nh = n_from_hashimoto(g, kmax);
    const auto nc = n_from_chebyshev(g, d, kmax);
    for (int k = 1; k <= kmax; ++k) {
      const BigInt no = walk_oracle(g, k, WalkMode::tailless_cycles);
      CHECK(n_from_lemma(m, d, k) == no);
      CHECK(nh[k] == no);
      CHECK(nc[k] == no);
    }
  }
}

TEST_CASE("M_k agrees with the closed-walk oracle") {
  const Graph p = generate_petersen();
  const auto m = m_sequence(nb_matrices(p, 3, 8));
  for (int k = 1; k <= 8; ++k)
    CHECK(m[k] == walk_oracle(p, k, WalkMode::closed_nb_walks));
}

TEST_CASE("walk_oracle") {
  // C5, k=5: 5 roots x 2 orientations.
  CHECK(walk_oracle(generate_cycle(5), 5, WalkMode::tailless_cycles) == 10);
  CHECK(walk_oracle(generate_complete(4), 3, WalkMode::tailless_cycles) == 24);
  // No room for a tail at k=3: M_3 = N_3.
  CHECK(walk_oracle(generate_complete(4), 3, WalkMode::closed_nb_walks) == 24);

  CHECK_THROWS_AS(
      walk_oracle(generate_petersen(), 12, WalkMode::tailless_cycles, 100),
      OracleBudgetError);
}

TEST_CASE("prime_counts") {
  SUBCASE("pi_1 = pi_2 = 0 always") {
    const auto pi = prime_counts(n_from_hashimoto(generate_petersen(), 6));
    CHECK(pi[1] == 0);
    CHECK(pi[2] == 0);
  }
  SUBCASE("C3: two orientations of the triangle, nothing new at 6") {
    const auto pi = prime_counts(n_from_hashimoto(generate_cycle(3), 6));
    CHECK(pi[3] == 2);
    CHECK(pi[6] == 0);
  }
  SUBCASE("K4: pi_3 = 8") {
    const auto pi = prime_counts(n_from_hashimoto(generate_complete(4), 4));
    CHECK(pi[3] == 8);
    CHECK(pi[4] == 6);
  }
  SUBCASE("inconsistent table reported") {
    std::vector<BigInt> n{BigInt(0), BigInt(0), BigInt(0), BigInt(7)};
    CHECK_THROWS_AS(prime_counts(n), ConsistencyError); // 7 not divisible by 3
    std::vector<BigInt> neg{BigInt(0), BigInt(0), BigInt(0), BigInt(-3)};
    CHECK_THROWS_AS(prime_counts(neg), ConsistencyError);
  }
}

TEST_CASE("prime_oracle") {
  SUBCASE("C3 up to 6") {
    const auto pi = prime_oracle(generate_cycle(3), 6);
    const std::vector<BigInt> expect{BigInt(0), BigInt(0), BigInt(0),
                                     BigInt(2), BigInt(0), BigInt(0),
                                     BigInt(0)};
    CHECK(pi == expect);
  }
  SUBCASE("K4 up to 4") {
    const auto pi = prime_oracle(generate_complete(4), 4);
    CHECK(pi[1] == 0);
    CHECK(pi[2] == 0);
    CHECK(pi[3] == 8);
    CHECK(pi[4] == 6);
  }
  SUBCASE("agrees with Moebius inversion") {
    for (const Graph& g :
         {generate_cycle(5), generate_complete(4), generate_petersen(),
          k4_minus_edge(), k23()}) {
      const auto via_moebius = prime_counts(n_from_hashimoto(g, 8));
      const auto via_enum = prime_oracle(g, 8);
      CHECK(via_moebius == via_enum);
    }
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(prime_oracle(generate_petersen(), 12, 50),
                    OracleBudgetError);
  }
}

TEST_CASE("matrix generating identity to order 12") {
  // (sum_j t^j A_j)(I - tA + (d-1) t^2 I) = (1 - t^2) I  mod t^13.
  for (const Graph& g : {generate_complete(4), generate_petersen()}) {
    const int d = *g.regular_degree();
    const int cap = 12;
    const auto seq = nb_matrices(g, d, cap);
    const std::size_t n = g.vertex_count();
    for (int c = 0; c <= cap; ++c) {
      IntMatrix acc = seq.a[c];
      if (c >= 1) acc = acc - seq.a[c - 1] * seq.a[1];
      if (c >= 2) acc = acc + seq.a[c - 2] * BigInt(d - 1);
      IntMatrix expect(n, n);
      if (c == 0) expect = IntMatrix::identity(n);
      if (c == 2) expect = expect - IntMatrix::identity(n);
      CHECK(acc == expect);
    }
  }
}

TEST_CASE("telescoping sum equals G_k(A)") {
  for (const Graph& g : {generate_complete(4), generate_hypercube(3)}) {
    const int d = *g.regular_degree();
    const auto seq = nb_matrices(g, d, 12);
    const IntMatrix a = adjacency_matrix(g);
    for (int k = 0; k <= 12; ++k) {
      IntMatrix sum(g.vertex_count(), g.vertex_count());
      for (int j = k; j >= 0; j -= 2) sum = sum + seq.a[j];
      CHECK(sum == poly_eval_matrix(dilated({d - 1, DilatedKind::G}, k), a));
      // ... and consequently A_k = G_k(A) - G_{k-2}(A).
      if (k >= 2)
        CHECK(seq.a[k] ==
              poly_eval_matrix(dilated({d - 1, DilatedKind::G}, k), a) -
                  poly_eval_matrix(dilated({d - 1, DilatedKind::G}, k - 2), a));
    }
  }
}

TEST_CASE("count_table") {
  const Graph k4 = generate_complete(4);
  const CountTable t = count_table(k4, 6);
  CHECK(t.kmax == 6);
  CHECK(t.n[3] == 24);
  CHECK(t.pi[3] == 8);
  CHECK(t.m[3] == 24);
  // N_k = sum_{l | k} l pi_l.
  for (int k = 1; k <= 6; ++k) {
    BigInt acc(0);
    for (int l = 1; l <= k; ++l)
      if (k % l == 0) acc += BigInt(l) * t.pi[l];
    CHECK(acc == t.n[k]);
  }

  const CountTable ti = count_table(k4_minus_edge(), 4);
  CHECK(ti.m.empty());
  // Two surviving triangles, 3 roots and 2 orientations each.
  CHECK(ti.n[3] == 12);
  CHECK(ti.pi[3] == 4);
}
