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

#ifndef IZETA_CHEBYSHEV_HPP
#define IZETA_CHEBYSHEV_HPP

#include <cstddef>

#include "izeta/int_polynomial.hpp"

namespace izeta {

enum class ChebyshevKind { U, T };

// Chebyshev polynomial of the given kind and order, exact coefficients.
// U_0 = 1, U_1 = 2x, U_k = 2x U_{k-1} - U_{k-2};
// T_0 = 1, T_1 = x,  T_k = 2x T_{k-1} - T_{k-2}.
// Negative orders are the zero polynomial.
IntPolynomial chebyshev(ChebyshevKind kind, int k);

// Integer-coefficient rescalings of U_k and 2T_k at parameter q >= 1:
//   G_k(x) = q^{k/2} U_k(x / 2 sqrt(q)),   G_0 = 1, G_1 = x,
//   F_k(x) = 2 q^{k/2} T_k(x / 2 sqrt(q)), F_0 = 2, F_1 = x,
// both satisfying P_k = x P_{k-1} - q P_{k-2}. The rescaling keeps every
// evaluation in Z; with q = d-1 these are the closed forms used for
// non-backtracking walk counts on d-regular graphs.
enum class DilatedKind { G, F };

struct DilatedFamily {
  int q;
  DilatedKind kind;
};

IntPolynomial dilated(DilatedFamily family, int k);

// True iff sum_{k<=order} kind_k(x0) t^k equals the closed-form generating
// function (1/(1-2*x0*t+t^2) for U, (1-x0*t)/(1-2*x0*t+t^2) for T) expanded
// with exact rational arithmetic.
bool generating_check(ChebyshevKind kind, std::size_t order,
                      const BigRational& x0);

} // namespace izeta

#endif // IZETA_CHEBYSHEV_HPP
