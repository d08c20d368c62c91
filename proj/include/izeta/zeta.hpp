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

#ifndef IZETA_ZETA_HPP
#define IZETA_ZETA_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/int_polynomial.hpp"
#include "izeta/rational_series.hpp"

namespace izeta {

enum class ZetaMethod { hashimoto, bass, bass_general };

// The reciprocal zeta polynomial zeta_G(t)^{-1} plus the factored structure
// needed for pole analysis. All integer data is exact; the adjacency
// spectrum (floats) is carried only for the pole/Ramanujan analyzer and is
// present exactly when the graph is regular.
struct ZetaReport {
  IntPolynomial reciprocal;     // constant term 1, degree 2|E|
  ZetaMethod method;
  long long euler_exponent;     // |E| - |V|, multiplicity of the (1-t^2) factor
  std::optional<IntPolynomial> quadratic_part; // det(I - tA + (D-I)t^2)
  int n_vertices;
  int n_edges;
  std::optional<int> regular_degree;
  std::optional<std::vector<double>> adjacency_spectrum; // descending
};

// zeta^{-1} = det(I - tH) over the Hashimoto matrix. Works for any graph
// with minimum degree >= 2 (regularity not required).
ZetaReport zeta_reciprocal_hashimoto(const Graph& g);

// Bass determinant formula for a d-regular graph:
//   zeta^{-1} = (1 - t^2)^{|E|-|V|} det(I - tA + (d-1) t^2 I),
// with the determinant obtained exactly from the characteristic polynomial
// of A via Q(t) = sum_i c_i (1 + (d-1)t^2)^i t^{n-i}.
ZetaReport zeta_reciprocal_bass(const Graph& g, int d);

// General form with the degree matrix D:
//   zeta^{-1} = (1 - t^2)^{|E|-|V|} det(I - tA + (D-I) t^2),
// evaluated by fraction-free elimination over Z[t]. Minimum degree >= 2.
ZetaReport bass_general(const Graph& g);

// exp(sum_{k<=order} N_k t^k / k); n is indexed n[1..order].
RationalSeries zeta_series(const std::vector<BigInt>& n, std::size_t order);

// prod_{l<=order} (1 - t^l)^{-pi_l} truncated; pi is indexed pi[1..order].
RationalSeries euler_truncation(const std::vector<BigInt>& pi,
                                std::size_t order);

enum class PoleClass { trivial, ramanujan, violating, boundary };

std::string to_string(PoleClass c);

struct PoleRecord {
  std::complex<double> value;
  double modulus;
  int multiplicity;
  PoleClass cls;
};

// Assembles the poles of zeta from the factored form: t = +-1 with
// multiplicity euler_exponent, plus the two roots of
// 1 - mu t + (d-1) t^2 per adjacency eigenvalue mu. Poles whose modulus is
// within eps of 1 or 1/(d-1) are classified trivial; the rest are ramanujan
// (modulus 1/sqrt(d-1)), boundary (eigenvalue within eps of 2 sqrt(d-1)) or
// violating. Requires the spectrum, i.e. a regular graph.
std::vector<PoleRecord> poles(const ZetaReport& report, int d, double eps);

struct RamanujanVerdict {
  bool is_ramanujan;
  std::vector<double> eigenvalues;       // descending
  double bound;                          // 2 sqrt(d-1)
  double epsilon;
  bool eigenvalue_criterion;
  std::optional<bool> pole_criterion;    // absent when d == 2 (degenerate)
  std::vector<double> witness_eigenvalues;
  std::vector<PoleRecord> witness_poles;
  std::vector<std::string> caveats;
};

// Both Ramanujan criteria for a connected d-regular graph: every eigenvalue
// with |mu| != d satisfies |mu| <= 2 sqrt(d-1) + eps, and every non-trivial
// pole has modulus within eps of 1/sqrt(d-1). Both are computed and must
// agree; disconnected graphs are rejected.
RamanujanVerdict ramanujan_check(const Graph& g, int d, double eps = 1e-8);

// Adjacency eigenvalues (symmetric eigensolver), sorted descending.
std::vector<double> adjacency_spectrum(const Graph& g);

} // namespace izeta

#endif // IZETA_ZETA_HPP
