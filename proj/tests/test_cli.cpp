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

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "izeta/generators.hpp"
#include "izeta/graph.hpp"

namespace {

std::string g_cli; // path to the izeta binary, passed as the last argument

struct CmdResult {
  int exit_code;
  std::string out;
};

// Runs a shell command, capturing stdout (stderr unless merge_stderr).
CmdResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      g_cli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path temp_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("izeta_cli_test_" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_graph(const std::string& name, const izeta::Graph& g) {
  const auto path = temp_dir() / name;
  std::ofstream out(path);
  out << izeta::format_graph(g);
  return path.string();
}

} // namespace

TEST_CASE("gen writes a parseable graph file") {
  const auto path = (temp_dir() / "c5.graph").string();
  const CmdResult r = run("gen cycle 5 -o " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const izeta::Graph g = izeta::parse_graph(text);
  CHECK(g.vertex_count() == 5);
  CHECK(g.regular_degree() == 2);
}

TEST_CASE("gen petersen to stdout") {
  const CmdResult r = run("gen petersen");
  CHECK(r.exit_code == 0);
  const izeta::Graph g = izeta::parse_graph(r.out);
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
}

TEST_CASE("gen rejects bad parameters with exit 2") {
  CHECK(run("gen complete 1", true).exit_code == 2);
  CHECK(run("gen unknown_family 3", true).exit_code == 2);
}

TEST_CASE("zeta text output for C3 is exact") {
  const auto path = write_graph("c3.graph", izeta::generate_cycle(3));
  const CmdResult r = run("zeta -g " + path + " --method hashimoto");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 0 0 -2 0 0 1\n");
}

TEST_CASE("zeta methods agree byte-for-byte on K4") {
  const auto path = write_graph("k4.graph", izeta::generate_complete(4));
  const CmdResult h = run("zeta -g " + path + " --method hashimoto");
  const CmdResult b = run("zeta -g " + path + " --method bass");
  const CmdResult g = run("zeta -g " + path + " --method bass-general");
  CHECK(h.exit_code == 0);
  CHECK(h.out == b.out);
  CHECK(h.out == g.out);
}

TEST_CASE("zeta --method bass on an irregular graph points to bass-general") {
  const auto path = write_graph(
      "k4me.graph", izeta::Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const CmdResult r = run("zeta -g " + path + " --method bass", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("bass-general") != std::string::npos);
}

TEST_CASE("zeta --method series") {
  const auto path = write_graph("c3s.graph", izeta::generate_cycle(3));
  const CmdResult r = run("zeta -g " + path + " --method series --order 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 0 0 2 0 0 3 0\n");
  // --order is required for series.
  CHECK(run("zeta -g " + path + " --method series", true).exit_code == 2);
}

TEST_CASE("zeta --json round-trips against the text output") {
  const auto path = write_graph("k4j.graph", izeta::generate_complete(4));
  const CmdResult text = run("zeta -g " + path);
  const CmdResult js = run("zeta -g " + path + " --json");
  CHECK(js.exit_code == 0);
  const auto j = nlohmann::json::parse(js.out);
  std::string joined;
  for (const auto& c : j["reciprocal_coeffs"]) {
    if (!joined.empty()) joined += ' ';
    joined += c.get<std::string>();
  }
  CHECK(joined + "\n" == text.out);
  CHECK(j["n"] == 4);
  CHECK(j["edges"] == 6);
  CHECK(j["regular_degree"] == 3);
  CHECK(j["euler_exponent"] == 2);
  CHECK(j["is_ramanujan"] == true);
  CHECK(j["poles"].size() > 0);
}

TEST_CASE("nk tables") {
  const auto path = write_graph("k4n.graph", izeta::generate_complete(4));
  for (const std::string method : {"lemma", "hashimoto", "chebyshev", "oracle"}) {
    const CmdResult r = run("nk -g " + path + " --max-k 3 --method " + method);
    CHECK(r.exit_code == 0);
    if (method == "lemma")
      CHECK(r.out == "1 0 0\n2 0 0\n3 24 24\n");
    else
      CHECK(r.out == "1 0\n2 0\n3 24\n");
  }

  const auto c3 = write_graph("c3n.graph", izeta::generate_cycle(3));
  const CmdResult r = run("nk -g " + c3 + " --max-k 6");
  CHECK(r.out == "1 0\n2 0\n3 6\n4 0\n5 0\n6 6\n");
}

TEST_CASE("primes table") {
  const auto path = write_graph("k4p.graph", izeta::generate_complete(4));
  const CmdResult r = run("primes -g " + path + " --max-k 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 0\n2 0\n3 8\n4 6\n");
  const CmdResult o = run("primes -g " + path + " --max-k 4 --oracle");
  CHECK(o.out == r.out);
}

TEST_CASE("oracle budget guard surfaces as a usage error") {
  const auto path = write_graph("pet.graph", izeta::generate_petersen());
  const CmdResult r =
      run("nk -g " + path + " --max-k 12 --method oracle --oracle-budget 10",
          true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("ramanujan verdicts") {
  const auto k4 = write_graph("k4r.graph", izeta::generate_complete(4));
  const CmdResult r = run("ramanujan -g " + k4);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("is_ramanujan: yes") != std::string::npos);

  const auto cl = write_graph("cl20.graph", izeta::generate_circular_ladder(20));
  const CmdResult rc = run("ramanujan -g " + cl);
  CHECK(rc.exit_code == 0);
  CHECK(rc.out.find("is_ramanujan: no") != std::string::npos);
  CHECK(rc.out.find("witness eigenvalue: 2.902") != std::string::npos);

  const CmdResult js = run("ramanujan -g " + cl + " --json");
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["is_ramanujan"] == false);

  const auto disc = write_graph(
      "disc.graph",
      izeta::Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
  CHECK(run("ramanujan -g " + disc, true).exit_code == 2);
}

TEST_CASE("verify passes on K4 and Petersen") {
  const auto k4 = write_graph("k4v.graph", izeta::generate_complete(4));
  const CmdResult r = run("verify -g " + k4 + " --max-k 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto pet = write_graph("petv.graph", izeta::generate_petersen());
  const CmdResult rp = run("verify -g " + pet + " --max-k 8");
  CHECK(rp.exit_code == 0);
}

TEST_CASE("verify exits nonzero under injected corruption") {
  const auto k4 = write_graph("k4i.graph", izeta::generate_complete(4));
  const CmdResult nk = run("verify -g " + k4 + " --max-k 8 --inject nk:5");
  CHECK(nk.exit_code == 1);
  CHECK(nk.out.find("FAIL nk-four-way") != std::string::npos);

  const CmdResult coeff = run("verify -g " + k4 + " --max-k 8 --inject coeff:3");
  CHECK(coeff.exit_code == 1);
  CHECK(coeff.out.find("FAIL bass-identity") != std::string::npos);
}

TEST_CASE("CLI output is deterministic") {
  const auto path = write_graph("det.graph", izeta::generate_petersen());
  const CmdResult a = run("zeta -g " + path + " --json");
  const CmdResult b = run("zeta -g " + path + " --json");
  CHECK(a.out == b.out);
  const CmdResult c = run("ramanujan -g " + path);
  const CmdResult d = run("ramanujan -g " + path);
  CHECK(c.out == d.out);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run("zeta -g /nonexistent/file.graph", true).exit_code == 2);
  const auto bad = temp_dir() / "bad.graph";
  std::ofstream(bad) << "2 1\n0 0\n";
  CHECK(run("zeta -g " + bad.string(), true).exit_code == 2);
  CHECK(run("", true).exit_code == 2);
}

TEST_CASE("--help exits 0") {
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("gen output is reproducible byte-for-byte") {
  const CmdResult a = run("gen circulant 8 1 4");
  const CmdResult b = run("gen circulant 8 1 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

int main(int argc, char** argv) {
  // ctest passes the CLI binary path as the trailing argument.
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_cli = argv[argc - 1];
    --argc;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-izeta>\n");
    return 1;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
