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

#ifndef IZETA_POLY_DET_HPP
#define IZETA_POLY_DET_HPP

#include <vector>

#include "izeta/int_polynomial.hpp"

namespace izeta {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

// Exact determinant of a square matrix of integer polynomials via Bareiss
// fraction-free elimination; every intermediate division is exact in Z[t].
// Sizes <= 4 go through cofactor expansion instead.
IntPolynomial poly_det_bareiss(const PolyMatrix& m);

} // namespace izeta

#endif // IZETA_POLY_DET_HPP
