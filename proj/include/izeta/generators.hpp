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

#ifndef IZETA_GENERATORS_HPP
#define IZETA_GENERATORS_HPP

#include <string>
#include <vector>

#include "izeta/graph.hpp"

namespace izeta {

// Standard regular families. Edge lists are emitted in a fixed order so
// generated files are reproducible byte for byte.
Graph generate_cycle(int n);                            // n >= 3
Graph generate_complete(int n);                         // n >= 2
Graph generate_complete_bipartite(int a, int b);        // a == b >= 1
Graph generate_petersen();
Graph generate_hypercube(int r);                        // 1 <= r <= 20
Graph generate_circular_ladder(int n);                  // n >= 3
Graph generate_circulant(int n, const std::vector<int>& offsets);

// Dispatch by family name ("cycle", "complete", "complete_bipartite",
// "petersen", "hypercube", "circular_ladder", "circulant"); throws
// std::invalid_argument for unknown families or bad parameter counts.
Graph generate(const std::string& family, const std::vector<int>& params);

} // namespace izeta

#endif // IZETA_GENERATORS_HPP
