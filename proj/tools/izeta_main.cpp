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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "izeta/errors.hpp"
#include "izeta/generators.hpp"
#include "izeta/graph.hpp"
#include "izeta/nb_walks.hpp"
#include "izeta/report.hpp"
#include "izeta/verify.hpp"
#include "izeta/zeta.hpp"

namespace {

using namespace izeta;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot write file: " + output_path);
  out << text;
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

struct Options {
  std::string graph_path;
  std::string output_path;
  std::string method = "hashimoto";
  int max_k = 10;
  long long order = -1;
  double eps = 1e-8;
  bool json = false;
  bool oracle = false;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::string family;
  std::vector<int> params;
  std::string inject;
};

int cmd_gen(const Options& opt) {
  const Graph g = generate(opt.family, opt.params);
  emit(format_graph(g), opt.output_path);
  return kExitOk;
}

ZetaReport zeta_by_method(const Graph& g, const std::string& method) {
  if (method == "hashimoto") return zeta_reciprocal_hashimoto(g);
  if (method == "bass") {
    const auto d = g.regular_degree();
    if (!d)
      throw std::invalid_argument(
          "method 'bass' requires a regular graph; use --method bass-general");
    return zeta_reciprocal_bass(g, *d);
  }
  if (method == "bass-general") return bass_general(g);
  throw std::invalid_argument("unknown method: " + method);
}

int cmd_zeta(const Options& opt) {
  const Graph g = load_graph(opt.graph_path);

  if (opt.method == "series") {
    if (opt.order < 1)
      throw std::invalid_argument("--method series requires --order >= 1");
    if (opt.json)
      throw std::invalid_argument("--json is not available for --method series");
    const auto n = n_from_hashimoto(g, static_cast<int>(opt.order));
    emit(zeta_series(n, opt.order).to_string() + "\n", opt.output_path);
    return kExitOk;
  }

  const ZetaReport report = zeta_by_method(g, opt.method);
  if (!opt.json) {
    emit(report.reciprocal.to_string() + "\n", opt.output_path);
    return kExitOk;
  }

  std::optional<std::vector<PoleRecord>> pole_list;
  std::optional<RamanujanVerdict> verdict;
  std::vector<std::string> caveats;
  if (report.regular_degree) {
    pole_list = poles(report, *report.regular_degree, opt.eps);
    if (g.is_connected())
      verdict = ramanujan_check(g, *report.regular_degree, opt.eps);
    else
      caveats.push_back("disconnected graph: Ramanujan verdict not defined");
  } else {
    caveats.push_back("irregular graph: pole analysis not available");
  }
  emit(json_report(g, report, pole_list, verdict, caveats).dump(2) + "\n",
       opt.output_path);
  return kExitOk;
}

int cmd_nk(const Options& opt) {
  const Graph g = load_graph(opt.graph_path);
  std::ostringstream out;
  if (opt.method == "lemma") {
    const auto d = g.regular_degree();
    if (!d || *d < 2)
      throw std::invalid_argument("method 'lemma' requires a regular graph");
    const auto m = m_sequence(nb_matrices(g, *d, opt.max_k));
    for (int k = 1; k <= opt.max_k; ++k)
      out << k << ' ' << n_from_lemma(m, *d, k) << ' ' << m[k] << '\n';
  } else if (opt.method == "hashimoto" || opt.method.empty()) {
    const auto n = n_from_hashimoto(g, opt.max_k);
    for (int k = 1; k <= opt.max_k; ++k) out << k << ' ' << n[k] << '\n';
  } else if (opt.method == "chebyshev") {
    const auto d = g.regular_degree();
    if (!d || *d < 2)
      throw std::invalid_argument("method 'chebyshev' requires a regular graph");
    const auto n = n_from_chebyshev(g, *d, opt.max_k);
    for (int k = 1; k <= opt.max_k; ++k) out << k << ' ' << n[k] << '\n';
  } else if (opt.method == "oracle") {
    for (int k = 1; k <= opt.max_k; ++k)
      out << k << ' '
          << walk_oracle(g, k, WalkMode::tailless_cycles, opt.oracle_budget)
          << '\n';
  } else {
    throw std::invalid_argument("unknown method: " + opt.method);
  }
  emit(out.str(), opt.output_path);
  return kExitOk;
}

int cmd_primes(const Options& opt) {
  const Graph g = load_graph(opt.graph_path);
  std::ostringstream out;
  const std::vector<BigInt> pi =
      opt.oracle ? prime_oracle(g, opt.max_k, opt.oracle_budget)
                 : prime_counts(n_from_hashimoto(g, opt.max_k));
  for (int l = 1; l <= opt.max_k; ++l) out << l << ' ' << pi[l] << '\n';
  emit(out.str(), opt.output_path);
  return kExitOk;
}

int cmd_ramanujan(const Options& opt) {
  const Graph g = load_graph(opt.graph_path);
  const auto d = g.regular_degree();
  if (!d || *d < 2)
    throw std::invalid_argument("ramanujan requires a regular graph of degree >= 2");
  const RamanujanVerdict v = ramanujan_check(g, *d, opt.eps);

  if (opt.json) {
    const ZetaReport report = zeta_reciprocal_bass(g, *d);
    const auto pole_list = poles(report, *d, opt.eps);
    emit(json_report(g, report, pole_list, v).dump(2) + "\n", opt.output_path);
    return kExitOk;
  }

  std::ostringstream out;
  out << "degree: " << *d << '\n';
  out << "bound 2*sqrt(d-1): " << fmt15(v.bound) << '\n';
  out << "eigenvalue criterion: " << (v.eigenvalue_criterion ? "pass" : "fail")
      << '\n';
  out << "pole criterion: "
      << (v.pole_criterion ? (*v.pole_criterion ? "pass" : "fail") : "skipped")
      << '\n';
  for (double w : v.witness_eigenvalues)
    out << "witness eigenvalue: " << fmt15(w) << '\n';
  for (const PoleRecord& p : v.witness_poles)
    out << "witness pole: " << fmt15(p.value.real()) << (p.value.imag() < 0 ? "-" : "+")
        << fmt15(std::abs(p.value.imag())) << "i modulus " << fmt15(p.modulus)
        << '\n';
  for (const std::string& c : v.caveats) out << "caveat: " << c << '\n';
  out << "is_ramanujan: " << (v.is_ramanujan ? "yes" : "no") << '\n';
  emit(out.str(), opt.output_path);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const Graph g = load_graph(opt.graph_path);
  Corruption inject;
  if (!opt.inject.empty()) {
    const auto colon = opt.inject.find(':');
    const std::string kind = opt.inject.substr(0, colon);
    if (colon == std::string::npos)
      throw std::invalid_argument("--inject expects nk:<k> or coeff:<i>");
    inject.index = std::stoi(opt.inject.substr(colon + 1));
    if (kind == "nk")
      inject.kind = Corruption::Kind::count;
    else if (kind == "coeff")
      inject.kind = Corruption::Kind::coefficient;
    else
      throw std::invalid_argument("--inject expects nk:<k> or coeff:<i>");
  }
  const VerifyOutcome outcome =
      run_verification(g, opt.max_k, opt.oracle_budget, inject);
  std::ostringstream out;
  for (const VerifyCheck& c : outcome.checks) {
    if (c.pass)
      out << "ok " << c.name << '\n';
    else
      out << "FAIL " << c.name << ": " << c.detail << '\n';
  }
  out << "verify: " << (outcome.all_pass() ? "PASS" : "FAIL") << '\n';
  emit(out.str(), opt.output_path);
  return outcome.exit_code();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ihara zeta functions of finite graphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph_opt = [&](CLI::App* sub) {
    sub->add_option("-g,--graph", opt.graph_path, "graph file")->required();
  };
  auto add_output_opt = [&](CLI::App* sub) {
    sub->add_option("-o,--output", opt.output_path,
                    "write output to a file instead of stdout");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate a standard graph");
  gen->add_option("family", opt.family,
                  "cycle | complete | complete_bipartite | petersen | "
                  "hypercube | circular_ladder | circulant")
      ->required();
  gen->add_option("params", opt.params, "family parameters");
  add_output_opt(gen);

  CLI::App* zeta = app.add_subcommand("zeta", "reciprocal zeta polynomial");
  add_graph_opt(zeta);
  zeta->add_option("--method", opt.method,
                   "hashimoto | bass | bass-general | series");
  zeta->add_option("--order", opt.order, "series truncation order");
  zeta->add_option("--eps", opt.eps, "float tolerance for pole analysis");
  zeta->add_flag("--json", opt.json, "JSON report");
  add_output_opt(zeta);

  CLI::App* nk = app.add_subcommand("nk", "non-backtracking cycle counts N_k");
  add_graph_opt(nk);
  nk->add_option("--max-k", opt.max_k, "largest length")->required();
  nk->add_option("--method", opt.method,
                 "lemma | hashimoto | chebyshev | oracle");
  nk->add_option("--oracle-budget", opt.oracle_budget,
                 "step budget for brute-force enumeration");
  add_output_opt(nk);

  CLI::App* primes = app.add_subcommand("primes", "prime cycle-class counts");
  add_graph_opt(primes);
  primes->add_option("--max-k", opt.max_k, "largest length")->required();
  primes->add_flag("--oracle", opt.oracle,
                   "enumerate classes instead of Moebius inversion");
  primes->add_option("--oracle-budget", opt.oracle_budget,
                     "step budget for brute-force enumeration");
  add_output_opt(primes);

  CLI::App* ram = app.add_subcommand("ramanujan", "Ramanujan verdict");
  add_graph_opt(ram);
  ram->add_option("--eps", opt.eps, "tolerance");
  ram->add_flag("--json", opt.json, "JSON report");
  add_output_opt(ram);

  CLI::App* verify = app.add_subcommand("verify", "run all cross-checks");
  add_graph_opt(verify);
  verify->add_option("--max-k", opt.max_k, "largest length (default 10)");
  verify->add_option("--oracle-budget", opt.oracle_budget,
                     "step budget for brute-force enumeration");
  verify->add_option("--inject", opt.inject,
                     "inject an off-by-one corruption (nk:<k> or coeff:<i>) "
                     "before cross-checking; for negative-control testing");
  add_output_opt(verify);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen(opt);
    if (zeta->parsed()) return cmd_zeta(opt);
    if (nk->parsed()) return cmd_nk(opt);
    if (primes->parsed()) return cmd_primes(opt);
    if (ram->parsed()) return cmd_ramanujan(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
