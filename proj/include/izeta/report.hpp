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

#ifndef IZETA_REPORT_HPP
#define IZETA_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "izeta/graph.hpp"
#include "izeta/zeta.hpp"

namespace izeta {

// JSON report schema shared by the CLI commands:
//   n, edges, regular_degree (null if irregular), reciprocal_coeffs
//   (decimal strings, ascending), euler_exponent, poles
//   ({re, im, modulus, multiplicity, class}), is_ramanujan (bool or null),
//   caveats. Floats are serialized with 15 significant digits.
nlohmann::ordered_json json_report(
    const Graph& g, const ZetaReport& report,
    const std::optional<std::vector<PoleRecord>>& pole_list,
    const std::optional<RamanujanVerdict>& verdict,
    const std::vector<std::string>& extra_caveats = {});

// Clamps a double to 15 significant digits (the JSON serialization rule).
double json_float(double v);

} // namespace izeta

#endif // IZETA_REPORT_HPP
