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

#include "izeta/verify.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "izeta/chebyshev.hpp"
#include "izeta/errors.hpp"
#include "izeta/zeta.hpp"

namespace izeta {

namespace {

std::string first_poly_diff(const IntPolynomial& a, const IntPolynomial& b,
                            const char* la, const char* lb) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i) {
    if (a.coeff(i) != b.coeff(i)) {
      std::ostringstream out;
      out << "first differing coefficient t^" << i << ": " << la << "="
          << a.coeff(i) << " " << lb << "=" << b.coeff(i);
      return out.str();
    }
  }
  return "";
}

std::string first_series_diff(const RationalSeries& a, const RationalSeries& b,
                              const char* la, const char* lb) {
  for (std::size_t k = 0; k <= std::min(a.order(), b.order()); ++k) {
    if (a.coeff(k) != b.coeff(k)) {
      std::ostringstream out;
      out << "first differing coefficient t^" << k << ": " << la << "="
          << a.coeff(k) << " " << lb << "=" << b.coeff(k);
      return out.str();
    }
  }
  return "";
}

} // namespace

bool VerifyOutcome::all_pass() const {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

VerifyOutcome run_verification(const Graph& g, int max_k,
                               std::uint64_t oracle_budget,
                               const Corruption& inject) {
  if (max_k < 3)
    throw std::invalid_argument("verify: max_k must be >= 3");

  VerifyOutcome outcome;
  // Exceptions inside a check (e.g. a Moebius inversion that stops being
  // integral after corruption) count as failures of that check.
  auto run = [&](const std::string& name,
                 const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      outcome.checks.push_back({name, ok, detail});
    } catch (const std::exception& e) {
      outcome.checks.push_back({name, false, e.what()});
    }
  };

  // Shared tables. Corruption is injected here so every downstream check
  // sees the perturbed data.
  ZetaReport zh = zeta_reciprocal_hashimoto(g);
  if (inject.kind == Corruption::Kind::coefficient) {
    if (inject.index < 0 || inject.index > zh.reciprocal.degree())
      throw std::invalid_argument("inject: coefficient index out of range");
    std::vector<BigInt> c = zh.reciprocal.coeffs();
    c[inject.index] += 1;
    zh.reciprocal = IntPolynomial(std::move(c));
  }
  std::vector<BigInt> n_h = n_from_hashimoto(g, max_k);
  if (inject.kind == Corruption::Kind::count) {
    if (inject.index < 1 || inject.index > max_k)
      throw std::invalid_argument("inject: N_k index out of range");
    n_h[inject.index] += 1;
  }

  const auto dopt = g.regular_degree();
  const bool regular = dopt.has_value() && *dopt >= 2;
  const std::size_t series_order = std::min(max_k, 12);

  run("hashimoto-structure", [&]() -> std::pair<bool, std::string> {
    const IntMatrix h = hashimoto_matrix(g);
    const auto des = directed_edges(g);
    for (const DirectedEdge& e : des) {
      BigInt row_sum(0);
      for (std::size_t j = 0; j < h.cols(); ++j) row_sum += h(e.index, j);
      if (row_sum != g.degree(e.terminus) - 1)
        return {false, "row " + std::to_string(e.index) + " sums to " +
                           row_sum.str() + ", expected deg(ter)-1 = " +
                           std::to_string(g.degree(e.terminus) - 1)};
    }
    return {true, ""};
  });

  if (regular) {
    run("bass-identity", [&]() -> std::pair<bool, std::string> {
      const ZetaReport zb = zeta_reciprocal_bass(g, *dopt);
      if (zh.reciprocal == zb.reciprocal) return {true, ""};
      return {false, first_poly_diff(zh.reciprocal, zb.reciprocal, "hashimoto",
                                     "bass")};
    });
  }

  run("bass-general-identity", [&]() -> std::pair<bool, std::string> {
    const ZetaReport zg = bass_general(g);
    if (zh.reciprocal == zg.reciprocal) return {true, ""};
    return {false, first_poly_diff(zh.reciprocal, zg.reciprocal, "hashimoto",
                                   "bass-general")};
  });

  if (regular) {
    run("nk-four-way", [&]() -> std::pair<bool, std::string> {
      const auto m = m_sequence(nb_matrices(g, *dopt, max_k));
      const auto n_c = n_from_chebyshev(g, *dopt, max_k);
      for (int k = 1; k <= max_k; ++k) {
        const BigInt n_l = n_from_lemma(m, *dopt, k);
        const BigInt n_o =
            walk_oracle(g, k, WalkMode::tailless_cycles, oracle_budget);
        if (n_l != n_h[k] || n_h[k] != n_c[k] || n_c[k] != n_o) {
          std::ostringstream out;
          out << "N_" << k << ": lemma=" << n_l << " hashimoto=" << n_h[k]
              << " chebyshev=" << n_c[k] << " oracle=" << n_o;
          return {false, out.str()};
        }
      }
      return {true, ""};
    });

    run("m-oracle-agreement", [&]() -> std::pair<bool, std::string> {
      const auto m = m_sequence(nb_matrices(g, *dopt, max_k));
      for (int k = 1; k <= max_k; ++k) {
        const BigInt m_o =
            walk_oracle(g, k, WalkMode::closed_nb_walks, oracle_budget);
        if (m[k] != m_o)
          return {false, "M_" + std::to_string(k) + ": trace=" + m[k].str() +
                             " oracle=" + m_o.str()};
      }
      return {true, ""};
    });

    run("tail-decomposition", [&]() -> std::pair<bool, std::string> {
      std::vector<BigInt> n_o(max_k + 1, BigInt(0)), m_o(max_k + 1, BigInt(0));
      for (int k = 1; k <= max_k; ++k) {
        n_o[k] = walk_oracle(g, k, WalkMode::tailless_cycles, oracle_budget);
        m_o[k] = walk_oracle(g, k, WalkMode::closed_nb_walks, oracle_budget);
      }
      for (int k = 3; k <= max_k; ++k)
        if (!tail_decomposition_check(n_o, m_o, *dopt, k))
          return {false, "decomposition fails at k=" + std::to_string(k)};
      return {true, ""};
    });
  } else {
    run("nk-hashimoto-oracle", [&]() -> std::pair<bool, std::string> {
      for (int k = 1; k <= max_k; ++k) {
        const BigInt n_o =
            walk_oracle(g, k, WalkMode::tailless_cycles, oracle_budget);
        if (n_h[k] != n_o)
          return {false, "N_" + std::to_string(k) + ": hashimoto=" +
                             n_h[k].str() + " oracle=" + n_o.str()};
      }
      return {true, ""};
    });
  }

  run("prime-agreement", [&]() -> std::pair<bool, std::string> {
    const auto pi = prime_counts(n_h);
    const auto pi_o = prime_oracle(g, max_k, oracle_budget);
    for (int l = 1; l <= max_k; ++l)
      if (pi[l] != pi_o[l])
        return {false, "pi_" + std::to_string(l) + ": moebius=" + pi[l].str() +
                           " oracle=" + pi_o[l].str()};
    return {true, ""};
  });

  run("series-triple", [&]() -> std::pair<bool, std::string> {
    const RationalSeries from_reciprocal =
        series_inverse(zh.reciprocal, series_order);
    const RationalSeries from_counts = zeta_series(n_h, series_order);
    const RationalSeries from_primes =
        euler_truncation(prime_counts(n_h), series_order);
    if (!(from_reciprocal == from_counts))
      return {false, first_series_diff(from_reciprocal, from_counts,
                                       "1/reciprocal", "exp-series")};
    if (!(from_counts == from_primes))
      return {false, first_series_diff(from_counts, from_primes, "exp-series",
                                       "euler-product")};
    return {true, ""};
  });

  if (regular) {
    const int q = *dopt - 1;

    run("chebyshev-identities", [&]() -> std::pair<bool, std::string> {
      for (int k = 1; k <= 50; ++k) {
        const IntPolynomial lhs =
            chebyshev(ChebyshevKind::U, k) - chebyshev(ChebyshevKind::U, k - 2);
        if (!(lhs == chebyshev(ChebyshevKind::T, k) * BigInt(2)))
          return {false, "U_k - U_{k-2} != 2 T_k at k=" + std::to_string(k)};
        const IntPolynomial dl = dilated({q, DilatedKind::G}, k) -
                                 dilated({q, DilatedKind::G}, k - 2) * BigInt(q);
        if (!(dl == dilated({q, DilatedKind::F}, k)))
          return {false, "G_k - q G_{k-2} != F_k at k=" + std::to_string(k)};
      }
      for (const BigRational& x0 :
           {BigRational(0), BigRational(1), BigRational(-1), BigRational(3, 7),
            BigRational(-5, 2)}) {
        if (!generating_check(ChebyshevKind::U, 20, x0))
          return {false, "U generating function check failed"};
        if (!generating_check(ChebyshevKind::T, 20, x0))
          return {false, "T generating function check failed"};
      }
      return {true, ""};
    });

    run("generating-function-identity", [&]() -> std::pair<bool, std::string> {
      // (sum_j t^j A_j)(I - tA + (d-1)t^2 I) == (1 - t^2) I  mod t^{K+1}.
      const int cap = static_cast<int>(series_order);
      const auto seq = nb_matrices(g, *dopt, cap);
      const std::size_t n = g.vertex_count();
      const IntMatrix id = IntMatrix::identity(n);
      for (int c = 0; c <= cap; ++c) {
        IntMatrix acc = seq.a[c]; // j = c term: A_c * I
        if (c >= 1) acc = acc - seq.a[c - 1] * seq.a[1];
        if (c >= 2) acc = acc + seq.a[c - 2] * BigInt(*dopt - 1);
        IntMatrix expect(n, n);
        if (c == 0) expect = id;
        if (c == 2) expect = expect - id;
        if (!(acc == expect))
          return {false, "product coefficient of t^" + std::to_string(c) +
                             " differs from (1-t^2) I"};
      }
      return {true, ""};
    });

    run("telescoping-sum", [&]() -> std::pair<bool, std::string> {
      const int cap = static_cast<int>(series_order);
      const auto seq = nb_matrices(g, *dopt, cap);
      const IntMatrix a = adjacency_matrix(g);
      for (int k = 0; k <= cap; ++k) {
        IntMatrix sum(g.vertex_count(), g.vertex_count());
        for (int j = k; j >= 0; j -= 2) sum = sum + seq.a[j];
        if (!(sum == poly_eval_matrix(dilated({q, DilatedKind::G}, k), a)))
          return {false, "sum_{j} A_{k-2j} != G_k(A) at k=" +
                             std::to_string(k)};
      }
      return {true, ""};
    });
  }

  return outcome;
}

} // namespace izeta
