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

#ifndef IZETA_RATIONAL_SERIES_HPP
#define IZETA_RATIONAL_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "izeta/bigint.hpp"
#include "izeta/int_polynomial.hpp"

namespace izeta {

// Power series over exact rationals, truncated at a fixed order L
// (coefficients of t^0..t^L). Arithmetic on mixed orders truncates to the
// smaller order.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order)
      : order_(order), coeffs_(order + 1) {}

  static RationalSeries one(std::size_t order);
  static RationalSeries from_polynomial(const IntPolynomial& p,
                                        std::size_t order);

  std::size_t order() const { return order_; }
  const BigRational& coeff(std::size_t k) const { return coeffs_.at(k); }
  void set_coeff(std::size_t k, BigRational v) {
    coeffs_.at(k) = std::move(v);
  }

  RationalSeries operator+(const RationalSeries& rhs) const;
  RationalSeries operator-(const RationalSeries& rhs) const;
  RationalSeries operator*(const RationalSeries& rhs) const;
  bool operator==(const RationalSeries& rhs) const = default;

  // Multiplicative inverse to the same order; requires a nonzero constant
  // term.
  RationalSeries inverse() const;

  // Ascending coefficients separated by single spaces, each as a decimal
  // integer or "p/q".
  std::string to_string() const;

 private:
  std::size_t order_;
  std::vector<BigRational> coeffs_;
};

// q with p*q == 1 (mod t^{order+1}); rejects a zero constant term.
RationalSeries series_inverse(const IntPolynomial& p, std::size_t order);

// exp(s) truncated at s.order(); s must have zero constant term.
RationalSeries series_exp(const RationalSeries& s);

// log(s) truncated at s.order(); s must have constant term 1.
RationalSeries series_log(const RationalSeries& s);

} // namespace izeta

#endif // IZETA_RATIONAL_SERIES_HPP
