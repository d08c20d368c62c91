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

#ifndef IZETA_ERRORS_HPP
#define IZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace izeta {

enum class GraphErrorKind {
  malformed,
  self_loop,
  duplicate_edge,
  index_out_of_range,
  count_mismatch,
};

// Invalid graph input (parser or constructor). kind() distinguishes the
// failure classes so callers can react to each one separately.
class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

// Brute-force enumeration refused: the search-space estimate exceeds the
// configured step budget.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed (e.g. a division that must be exact was
// not). Signals a counting bug upstream, not bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

} // namespace izeta

#endif // IZETA_ERRORS_HPP
