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

#ifndef IZETA_NB_WALKS_HPP
#define IZETA_NB_WALKS_HPP

#include <cstdint>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/int_matrix.hpp"

namespace izeta {

inline constexpr std::uint64_t kDefaultOracleBudget = 1000000000ULL;

// Non-backtracking walk matrices of a d-regular graph: entry (v,w) of a[k]
// counts non-backtracking walks of length k from v to w.
//   a[0] = I, a[1] = A, a[2] = A^2 - dI,
//   a[k] = a[k-1] A - (d-1) a[k-2]   for k >= 3.
struct NBMatrixSequence {
  int degree;
  std::vector<IntMatrix> a; // a[0]..a[kmax]
};

NBMatrixSequence nb_matrices(const Graph& g, int d, int kmax);

// M_k = Tr(a[k]) for k = 0..kmax. M_k counts closed non-backtracking walks
// of length k that may carry one tail at the root.
std::vector<BigInt> m_sequence(const NBMatrixSequence& seq);

// N_k from the tail-stripping lemma:
//   N_k = M_k - (d-2)(M_{k-2} + M_{k-4} + ... + M_{1 or 2})  for k >= 3,
//   N_1 = N_2 = 0.
BigInt n_from_lemma(const std::vector<BigInt>& m, int d, int k);

// Forward form of the same lemma: true iff
//   M_k = N_k + (d-2) sum_{r>=1} (d-1)^{r-1} N_{k-2r},
// with N_j treated as 0 for j <= 2.
bool tail_decomposition_check(const std::vector<BigInt>& n,
                              const std::vector<BigInt>& m, int d, int k);

// N_k = Tr(H^k) for k = 1..kmax (index 0 of the result is unused and 0).
std::vector<BigInt> n_from_hashimoto(const Graph& g, int kmax);

// Chebyshev closed form with q = d-1: N_k = Tr(F_k(A)) for odd k and
// Tr(F_k(A)) + n(d-2) for even k >= 2, F_k evaluated at A by matrix Horner.
std::vector<BigInt> n_from_chebyshev(const Graph& g, int d, int kmax);

enum class WalkMode {
  tailless_cycles,  // rooted non-backtracking cycles: counts N_k
  closed_nb_walks,  // closed walks, one tail allowed at the root: counts M_k
};

// Exhaustive depth-first enumeration over directed-edge sequences, rooted at
// every directed edge, visiting successors in ascending edge index. Refuses
// when the search-space estimate 2|E| (maxdeg-1)^{k-1} exceeds the budget.
BigInt walk_oracle(const Graph& g, int k, WalkMode mode,
                   std::uint64_t budget = kDefaultOracleBudget);

// Prime cycle-class counts by Moebius inversion of N_k = sum_{l | k} l pi_l:
//   pi_l = (1/l) sum_{j | l} mu(l/j) N_j.
// Throws ConsistencyError if any pi_l comes out negative or non-integral.
std::vector<BigInt> prime_counts(const std::vector<BigInt>& n);

// Enumerates all tailless cycles up to length kmax, groups them by cyclic
// rotation and discards classes that are proper powers; returns class counts
// per length. Same budget guard as walk_oracle.
std::vector<BigInt> prime_oracle(const Graph& g, int kmax,
                                 std::uint64_t budget = kDefaultOracleBudget);

// N_k, M_k and pi_l for k = 1..kmax (index 0 unused). N via Tr(H^k), M via
// the walk-matrix recurrence (regular graphs only; empty otherwise), pi by
// Moebius inversion.
struct CountTable {
  int kmax = 0;
  std::vector<BigInt> n;
  std::vector<BigInt> m;
  std::vector<BigInt> pi;
};

CountTable count_table(const Graph& g, int kmax);

} // namespace izeta

#endif // IZETA_NB_WALKS_HPP
