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

#ifndef IZETA_INT_MATRIX_HPP
#define IZETA_INT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "izeta/bigint.hpp"
#include "izeta/int_polynomial.hpp"

namespace izeta {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator*(const BigInt& s) const;
  bool operator==(const IntMatrix& rhs) const = default;

  BigInt trace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Monic characteristic polynomial det(xI - a), computed exactly by the
// Faddeev-LeVerrier recurrence (every division is by an integer and exact).
IntPolynomial char_poly(const IntMatrix& a);

// det(I - t*a) as a polynomial in t: the coefficient reversal
// t^m * char_poly(a)(1/t). Constant term is always 1.
IntPolynomial reversed_det(const IntMatrix& a);

// Horner evaluation of p at a square matrix.
IntMatrix poly_eval_matrix(const IntPolynomial& p, const IntMatrix& a);

} // namespace izeta

#endif // IZETA_INT_MATRIX_HPP
