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

#include "izeta/poly_det.hpp"

#include <stdexcept>
#include <utility>

namespace izeta {

namespace {

// Laplace expansion along the first row; only used for n <= 4.
IntPolynomial det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  if (n == 1) return m[0][0];
  IntPolynomial det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor(n - 1, std::vector<IntPolynomial>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    IntPolynomial term = m[0][j] * det_cofactor(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

} // namespace

IntPolynomial poly_det_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("poly_det_bareiss: non-square matrix");
  if (n <= 4) return det_cofactor(m);

  PolyMatrix w = m;
  IntPolynomial prev = IntPolynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k].is_zero()) {
      std::size_t pivot = k;
      while (pivot < n && w[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {}; // column of zeros: singular
      std::swap(w[k], w[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w[i][j] =
            exact_divide(w[k][k] * w[i][j] - w[i][k] * w[k][j], prev);
      w[i][k] = {};
    }
    prev = w[k][k];
  }
  return negate ? -w[n - 1][n - 1] : w[n - 1][n - 1];
}

} // namespace izeta
