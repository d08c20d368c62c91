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

#ifndef IZETA_INT_POLYNOMIAL_HPP
#define IZETA_INT_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "izeta/bigint.hpp"

namespace izeta {

// Univariate polynomial over arbitrary-precision integers, stored as
// ascending coefficients with no trailing zeros. The zero polynomial is the
// empty coefficient list (degree -1).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of t^k; zero beyond the degree.
  const BigInt& coeff(std::size_t k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const BigInt& s) const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  bool operator==(const IntPolynomial& rhs) const = default;

  // Multiplication by t^k.
  IntPolynomial shifted(std::size_t k) const;
  IntPolynomial pow(unsigned e) const;

  BigInt eval(const BigInt& x) const;
  BigRational eval(const BigRational& x) const;

  // Ascending coefficients separated by single spaces ("1 -3 2" for
  // 1 - 3t + 2t^2); the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// Exact quotient a/b in Z[t]; throws ConsistencyError when the division
// leaves a remainder.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

} // namespace izeta

#endif // IZETA_INT_POLYNOMIAL_HPP
