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

#include "izeta/chebyshev.hpp"

#include <stdexcept>

#include "izeta/rational_series.hpp"

namespace izeta {

IntPolynomial chebyshev(ChebyshevKind kind, int k) {
  if (k < 0) return {};
  IntPolynomial prev = IntPolynomial::constant(1); // U_0 = T_0 = 1
  if (k == 0) return prev;
  IntPolynomial cur =
      kind == ChebyshevKind::U ? IntPolynomial({BigInt(0), BigInt(2)})
                               : IntPolynomial({BigInt(0), BigInt(1)});
  const IntPolynomial two_x({BigInt(0), BigInt(2)});
  for (int i = 2; i <= k; ++i) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial dilated(DilatedFamily family, int k) {
  if (family.q < 1)
    throw std::invalid_argument("dilated: q must be >= 1");
  if (k < 0) return {};
  IntPolynomial prev = IntPolynomial::constant(family.kind == DilatedKind::G
                                                   ? 1
                                                   : 2); // G_0 = 1, F_0 = 2
  if (k == 0) return prev;
  IntPolynomial cur({BigInt(0), BigInt(1)}); // G_1 = F_1 = x
  const IntPolynomial x({BigInt(0), BigInt(1)});
  const BigInt q(family.q);
  for (int i = 2; i <= k; ++i) {
    IntPolynomial next = x * cur - prev * q;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool generating_check(ChebyshevKind kind, std::size_t order,
                      const BigRational& x0) {
  if (order < 1)
    throw std::invalid_argument("generating_check: order must be >= 1");
  RationalSeries lhs(order);
  for (std::size_t k = 0; k <= order; ++k)
    lhs.set_coeff(k, chebyshev(kind, static_cast<int>(k)).eval(x0));

  // Denominator 1 - 2 x0 t + t^2, expanded as an exact rational series.
  RationalSeries den(order);
  den.set_coeff(0, 1);
  if (order >= 1) den.set_coeff(1, BigRational(-2) * x0);
  if (order >= 2) den.set_coeff(2, 1);
  RationalSeries rhs = den.inverse();
  if (kind == ChebyshevKind::T) {
    RationalSeries num(order);
    num.set_coeff(0, 1);
    num.set_coeff(1, -x0);
    rhs = num * rhs;
  }
  return lhs == rhs;
}

} // namespace izeta
