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

#ifndef IZETA_VERIFY_HPP
#define IZETA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/nb_walks.hpp"

namespace izeta {

struct VerifyCheck {
  std::string name;
  bool pass;
  std::string detail; // on failure: first differing index/coefficient
};

struct VerifyOutcome {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
};

// Deliberate off-by-one corruption injected before cross-checking; used by
// the negative-control tests to prove the checks can fail.
struct Corruption {
  enum class Kind { none, count, coefficient };
  Kind kind = Kind::none;
  int index = 0; // N_k index (count) or coefficient index (coefficient)
};

// Runs every cross-check that applies to the graph: the determinant-formula
// identities, the four-way N_k agreement, tail decomposition, prime-count
// agreement, the series triple, and the Chebyshev/matrix generating
// identities on the graph's parameters. Exit code 0 iff all checks pass.
VerifyOutcome run_verification(const Graph& g, int max_k,
                               std::uint64_t oracle_budget = kDefaultOracleBudget,
                               const Corruption& inject = {});

} // namespace izeta

#endif // IZETA_VERIFY_HPP
