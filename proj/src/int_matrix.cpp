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

#include "izeta/int_matrix.hpp"

#include <stdexcept>

#include "izeta/errors.hpp"

namespace izeta {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const BigInt& bkj = rhs(k, j);
        if (bkj != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator*(const BigInt& s) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] * s;
  return out;
}

BigInt IntMatrix::trace() const {
  if (!is_square())
    throw std::invalid_argument("IntMatrix: trace of non-square matrix");
  BigInt t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("char_poly: non-square matrix");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  // Faddeev-LeVerrier: M <- A M + c I, c_{n-k} = -Tr(A M)/k. The division
  // by k is exact over Z.
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    c[n - k] = -exact_div(am.trace(), BigInt(k));
    m = std::move(am);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial reversed_det(const IntMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("reversed_det: non-square matrix");
  const std::size_t n = a.rows();
  const IntPolynomial chi = char_poly(a);
  std::vector<BigInt> rev(n + 1);
  for (std::size_t j = 0; j <= n; ++j) rev[j] = chi.coeff(n - j);
  return IntPolynomial(std::move(rev));
}

IntMatrix poly_eval_matrix(const IntPolynomial& p, const IntMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("poly_eval_matrix: non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix acc(n, n);
  if (p.is_zero()) return acc;
  for (int i = p.degree(); i >= 0; --i) {
    if (i != p.degree()) acc = acc * a;
    const BigInt& ci = p.coeff(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < n; ++j) acc(j, j) += ci;
  }
  return acc;
}

} // namespace izeta
