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

#include "izeta/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace izeta {

double json_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json json_report(
    const Graph& g, const ZetaReport& report,
    const std::optional<std::vector<PoleRecord>>& pole_list,
    const std::optional<RamanujanVerdict>& verdict,
    const std::vector<std::string>& extra_caveats) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["edges"] = g.edge_count();
  if (report.regular_degree)
    j["regular_degree"] = *report.regular_degree;
  else
    j["regular_degree"] = nullptr;

  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  if (report.reciprocal.is_zero()) {
    coeffs.push_back("0");
  } else {
    for (const BigInt& c : report.reciprocal.coeffs())
      coeffs.push_back(c.str());
  }
  j["reciprocal_coeffs"] = std::move(coeffs);
  j["euler_exponent"] = report.euler_exponent;

  nlohmann::ordered_json jpoles = nlohmann::ordered_json::array();
  if (pole_list) {
    for (const PoleRecord& p : *pole_list) {
      nlohmann::ordered_json jp;
      jp["re"] = json_float(p.value.real());
      jp["im"] = json_float(p.value.imag());
      jp["modulus"] = json_float(p.modulus);
      jp["multiplicity"] = p.multiplicity;
      jp["class"] = to_string(p.cls);
      jpoles.push_back(std::move(jp));
    }
  }
  j["poles"] = std::move(jpoles);

  if (verdict)
    j["is_ramanujan"] = verdict->is_ramanujan;
  else
    j["is_ramanujan"] = nullptr;

  nlohmann::ordered_json caveats = nlohmann::ordered_json::array();
  if (verdict)
    for (const std::string& c : verdict->caveats) caveats.push_back(c);
  for (const std::string& c : extra_caveats) caveats.push_back(c);
  j["caveats"] = std::move(caveats);
  return j;
}

} // namespace izeta
