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

#include "izeta/rational_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace izeta {

RationalSeries RationalSeries::one(std::size_t order) {
  RationalSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

RationalSeries RationalSeries::from_polynomial(const IntPolynomial& p,
                                               std::size_t order) {
  RationalSeries s(order);
  const std::size_t top = std::min<std::size_t>(order, std::max(p.degree(), 0));
  for (std::size_t k = 0; k <= top; ++k) s.coeffs_[k] = BigRational(p.coeff(k));
  return s;
}

RationalSeries RationalSeries::operator+(const RationalSeries& rhs) const {
  RationalSeries out(std::min(order_, rhs.order_));
  for (std::size_t k = 0; k <= out.order_; ++k)
    out.coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
  return out;
}

RationalSeries RationalSeries::operator-(const RationalSeries& rhs) const {
  RationalSeries out(std::min(order_, rhs.order_));
  for (std::size_t k = 0; k <= out.order_; ++k)
    out.coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
  return out;
}

RationalSeries RationalSeries::operator*(const RationalSeries& rhs) const {
  RationalSeries out(std::min(order_, rhs.order_));
  for (std::size_t i = 0; i <= out.order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order_; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

RationalSeries RationalSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw std::invalid_argument("series inverse: zero constant term");
  RationalSeries out(order_);
  out.coeffs_[0] = BigRational(1) / coeffs_[0];
  for (std::size_t k = 1; k <= order_; ++k) {
    BigRational acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -acc / coeffs_[0];
  }
  return out;
}

std::string RationalSeries::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k <= order_; ++k) {
    if (k) out << ' ';
    out << coeffs_[k];
  }
  return out.str();
}

RationalSeries series_inverse(const IntPolynomial& p, std::size_t order) {
  if (p.coeff(0) == 0)
    throw std::invalid_argument("series_inverse: zero constant term");
  return RationalSeries::from_polynomial(p, order).inverse();
}

RationalSeries series_exp(const RationalSeries& s) {
  if (s.coeff(0) != 0)
    throw std::invalid_argument("series_exp: nonzero constant term");
  const std::size_t order = s.order();
  RationalSeries out = RationalSeries::one(order);
  // k e_k = sum_{j=1..k} j s_j e_{k-j}, from e' = s' e.
  for (std::size_t k = 1; k <= order; ++k) {
    BigRational acc(0);
    for (std::size_t j = 1; j <= k; ++j)
      acc += BigRational(j) * s.coeff(j) * out.coeff(k - j);
    out.set_coeff(k, acc / BigRational(k));
  }
  return out;
}

RationalSeries series_log(const RationalSeries& s) {
  if (s.coeff(0) != 1)
    throw std::invalid_argument("series_log: constant term must be 1");
  const std::size_t order = s.order();
  RationalSeries out(order);
  // k s_k = k l_k + sum_{j=1..k-1} j l_j s_{k-j}, from s l' = s'.
  for (std::size_t k = 1; k <= order; ++k) {
    BigRational acc = BigRational(k) * s.coeff(k);
    for (std::size_t j = 1; j < k; ++j)
      acc -= BigRational(j) * out.coeff(j) * s.coeff(k - j);
    out.set_coeff(k, acc / BigRational(k));
  }
  return out;
}

} // namespace izeta
