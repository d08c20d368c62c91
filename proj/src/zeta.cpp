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

#include "izeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "izeta/errors.hpp"
#include "izeta/poly_det.hpp"

namespace izeta {

namespace {

void require_min_degree_two(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 2)
      throw std::invalid_argument(
          "zeta is degenerate on graphs with a vertex of degree < 2 "
          "(vertex " +
          std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
          ")");
}

long long euler_exponent_of(const Graph& g) {
  return static_cast<long long>(g.edge_count()) - g.vertex_count();
}

// (1 - t^2)^e * q, e >= 0.
IntPolynomial apply_euler_factor(const IntPolynomial& q, long long e) {
  const IntPolynomial factor({BigInt(1), BigInt(0), BigInt(-1)});
  IntPolynomial out = q;
  for (long long i = 0; i < e; ++i) out = out * factor;
  return out;
}

void fill_common(ZetaReport& r, const Graph& g) {
  r.euler_exponent = euler_exponent_of(g);
  r.n_vertices = g.vertex_count();
  r.n_edges = g.edge_count();
  r.regular_degree = g.regular_degree();
  if (r.regular_degree) r.adjacency_spectrum = adjacency_spectrum(g);
}

// Multiplicities of repeated eigenvalues, clustering values closer than eps.
std::vector<std::pair<double, int>> cluster_spectrum(
    const std::vector<double>& spectrum, double eps) {
  std::vector<std::pair<double, int>> clusters;
  for (double mu : spectrum) {
    if (!clusters.empty() && std::abs(clusters.back().first - mu) <= eps)
      ++clusters.back().second;
    else
      clusters.emplace_back(mu, 1);
  }
  return clusters;
}

} // namespace

std::vector<double> adjacency_spectrum(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ZetaReport zeta_reciprocal_hashimoto(const Graph& g) {
  require_min_degree_two(g);
  ZetaReport r;
  r.method = ZetaMethod::hashimoto;
  r.reciprocal = reversed_det(hashimoto_matrix(g));
  fill_common(r, g);
  return r;
}

ZetaReport zeta_reciprocal_bass(const Graph& g, int d) {
  const auto rd = g.regular_degree();
  if (!rd || *rd != d)
    throw std::invalid_argument("bass: graph is not " + std::to_string(d) +
                                "-regular (use bass-general)");
  if (d < 2) throw std::invalid_argument("bass: degree must be >= 2");

  // Q(t) = det(I - tA + (d-1) t^2 I) = sum_i c_i (1 + (d-1)t^2)^i t^{n-i}
  // where char_poly(A) = sum_i c_i x^i.
  const std::size_t n = g.vertex_count();
  const IntPolynomial chi = char_poly(adjacency_matrix(g));
  const IntPolynomial s({BigInt(1), BigInt(0), BigInt(d - 1)});
  IntPolynomial q;
  IntPolynomial s_power = IntPolynomial::constant(1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (chi.coeff(i) != 0)
      q += (s_power * chi.coeff(i)).shifted(n - i);
    if (i < n) s_power = s_power * s;
  }

  ZetaReport r;
  r.method = ZetaMethod::bass;
  r.quadratic_part = q;
  r.reciprocal = apply_euler_factor(q, euler_exponent_of(g));
  fill_common(r, g);
  return r;
}

ZetaReport bass_general(const Graph& g) {
  require_min_degree_two(g);
  const std::size_t n = g.vertex_count();
  // I - tA + (D - I) t^2 as a matrix over Z[t].
  PolyMatrix m(n, std::vector<IntPolynomial>(n));
  const IntMatrix a = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        m[i][j] = IntPolynomial(
            {BigInt(1), BigInt(0), BigInt(g.degree(static_cast<int>(i)) - 1)});
      else if (a(i, j) != 0)
        m[i][j] = IntPolynomial({BigInt(0), -a(i, j)});
    }
  const IntPolynomial q = poly_det_bareiss(m);

  ZetaReport r;
  r.method = ZetaMethod::bass_general;
  r.quadratic_part = q;
  r.reciprocal = apply_euler_factor(q, euler_exponent_of(g));
  fill_common(r, g);
  return r;
}

RationalSeries zeta_series(const std::vector<BigInt>& n, std::size_t order) {
  if (n.size() <= order)
    throw std::invalid_argument("zeta_series: N table shorter than order");
  RationalSeries s(order);
  for (std::size_t k = 1; k <= order; ++k)
    s.set_coeff(k, BigRational(n[k], BigInt(k)));
  return series_exp(s);
}

RationalSeries euler_truncation(const std::vector<BigInt>& pi,
                                std::size_t order) {
  if (pi.size() <= order)
    throw std::invalid_argument("euler_truncation: pi table shorter than order");
  RationalSeries acc = RationalSeries::one(order);
  for (std::size_t l = 1; l <= order; ++l) {
    if (pi[l] == 0) continue;
    // (1 - t^l)^{-pi_l}: coefficient of t^{lj} is binom(pi_l + j - 1, j).
    RationalSeries factor(order);
    factor.set_coeff(0, 1);
    BigInt binom(1);
    for (std::size_t j = 1; l * j <= order; ++j) {
      binom = exact_div(binom * (pi[l] + BigInt(j) - 1), BigInt(j));
      factor.set_coeff(l * j, BigRational(binom));
    }
    acc = acc * factor;
  }
  return acc;
}

std::string to_string(PoleClass c) {
  switch (c) {
    case PoleClass::trivial: return "trivial";
    case PoleClass::ramanujan: return "ramanujan";
    case PoleClass::violating: return "violating";
    case PoleClass::boundary: return "boundary";
  }
  return "?";
}

std::vector<PoleRecord> poles(const ZetaReport& report, int d, double eps) {
  if (!report.adjacency_spectrum)
    throw std::invalid_argument(
        "pole analysis requires the factored regular form (adjacency "
        "spectrum unavailable)");
  if (d < 2) throw std::invalid_argument("poles: degree must be >= 2");
  const double q = d - 1.0;
  const double bound = 2.0 * std::sqrt(q);
  const double ram_modulus = 1.0 / std::sqrt(q);

  std::vector<PoleRecord> raw;
  const int e = static_cast<int>(report.euler_exponent);
  if (e > 0) {
    raw.push_back({{1.0, 0.0}, 1.0, e, PoleClass::trivial});
    raw.push_back({{-1.0, 0.0}, 1.0, e, PoleClass::trivial});
  }
  for (auto [mu, mult] : cluster_spectrum(*report.adjacency_spectrum, eps)) {
    const double abs_mu = std::abs(mu);
    const double sign = mu >= 0 ? 1.0 : -1.0;
    if (std::abs(abs_mu - d) <= eps) {
      // 1 - (+-d) t + (d-1) t^2 = (1 -+ t)(1 -+ (d-1)t).
      raw.push_back({{sign, 0.0}, 1.0, mult, PoleClass::trivial});
      raw.push_back({{sign / q, 0.0}, 1.0 / q, mult, PoleClass::trivial});
    } else if (std::abs(abs_mu - bound) <= eps) {
      // Double real root at the classification edge.
      const double t = mu / (2.0 * q);
      raw.push_back({{t, 0.0}, std::abs(t), 2 * mult, PoleClass::boundary});
    } else if (abs_mu < bound) {
      // Conjugate pair; |t|^2 = 1/(d-1) exactly.
      const double re = mu / (2.0 * q);
      const double im = std::sqrt(4.0 * q - mu * mu) / (2.0 * q);
      raw.push_back({{re, im}, ram_modulus, mult, PoleClass::ramanujan});
      raw.push_back({{re, -im}, ram_modulus, mult, PoleClass::ramanujan});
    } else {
      const double sd = std::sqrt(mu * mu - 4.0 * q);
      for (double t : {(mu + sd) / (2.0 * q), (mu - sd) / (2.0 * q)})
        raw.push_back({{t, 0.0}, std::abs(t), mult, PoleClass::violating});
    }
  }

  // Merge coincident poles (e.g. t=1 from the (1-t^2) factor and from the
  // mu = d quadratic).
  std::vector<PoleRecord> merged;
  for (const PoleRecord& p : raw) {
    bool found = false;
    for (PoleRecord& m : merged) {
      if (std::abs(m.value - p.value) <= eps) {
        m.multiplicity += p.multiplicity;
        if (p.cls == PoleClass::trivial) m.cls = PoleClass::trivial;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(p);
  }
  // Poles with modulus 1 or 1/(d-1) are excluded from the Ramanujan test.
  for (PoleRecord& p : merged)
    if (std::abs(p.modulus - 1.0) <= eps ||
        std::abs(p.modulus - 1.0 / q) <= eps)
      p.cls = PoleClass::trivial;

  std::sort(merged.begin(), merged.end(),
            [](const PoleRecord& a, const PoleRecord& b) {
              if (a.modulus != b.modulus) return a.modulus < b.modulus;
              return std::arg(a.value) < std::arg(b.value);
            });
  return merged;
}

RamanujanVerdict ramanujan_check(const Graph& g, int d, double eps) {
  const auto rd = g.regular_degree();
  if (!rd || *rd != d)
    throw std::invalid_argument("ramanujan_check: graph is not " +
                                std::to_string(d) + "-regular");
  if (d < 2) throw std::invalid_argument("ramanujan_check: degree must be >= 2");
  if (!g.is_connected())
    throw std::invalid_argument(
        "ramanujan_check: disconnected graph rejected (the trivial "
        "eigenvalue d has multiplicity > 1, so the verdict is ill-posed)");

  RamanujanVerdict v;
  v.epsilon = eps;
  v.bound = 2.0 * std::sqrt(d - 1.0);
  v.eigenvalues = adjacency_spectrum(g);

  if (d == 2) {
    // |E| = |V|: the trivial moduli {1, 1/(d-1)} collapse onto the
    // Ramanujan circle and the pole test is degenerate.
    v.is_ramanujan = true;
    v.eigenvalue_criterion = true;
    v.pole_criterion = std::nullopt;
    v.caveats.push_back(
        "d=2: trivially Ramanujan; the pole criterion is degenerate because "
        "the trivial moduli coincide with 1/sqrt(d-1)");
    return v;
  }

  for (double mu : v.eigenvalues) {
    const double abs_mu = std::abs(mu);
    if (std::abs(abs_mu - d) <= eps) continue; // trivial eigenvalue
    if (abs_mu > v.bound + eps)
      v.witness_eigenvalues.push_back(mu);
    else if (abs_mu >= v.bound - eps)
      v.caveats.push_back("eigenvalue " + std::to_string(mu) +
                          " lies within eps of the bound 2*sqrt(d-1)");
  }
  v.eigenvalue_criterion = v.witness_eigenvalues.empty();

  const ZetaReport report = zeta_reciprocal_bass(g, d);
  for (const PoleRecord& p : poles(report, d, eps)) {
    if (p.cls == PoleClass::violating)
      v.witness_poles.push_back(p);
    else if (p.cls == PoleClass::boundary)
      v.caveats.push_back("pole at modulus " + std::to_string(p.modulus) +
                          " lies within eps of the classification edge");
  }
  v.pole_criterion = v.witness_poles.empty();

  if (v.eigenvalue_criterion != *v.pole_criterion)
    throw ConsistencyError(
        "ramanujan_check: eigenvalue and pole criteria disagree");
  v.is_ramanujan = v.eigenvalue_criterion;
  return v;
}

} // namespace izeta
