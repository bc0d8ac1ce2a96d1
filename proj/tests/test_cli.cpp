// Copyright 2026 The Linkint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "linkint/cli.hpp"

using namespace linkint;

namespace {
const std::string kScenesDir = std::string(LINKINT_SOURCE_DIR) + "/scenes/";

const cli::MethodResult& result_of(const cli::PairReport& pr, const std::string& m) {
  for (const auto& r : pr.results)
    if (r.method == m) return r;
  throw std::runtime_error("no such method result: " + m);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LINKINT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("lk on the hopf scene: every method agrees") {
  cli::Options opt;
  opt.method = "all";
  const cli::RunReport rep = cli::run_lk(kScenesDir + "hopf.json", opt);
  CHECK(rep.exit_code == 0);
  REQUIRE(rep.pairs.size() == 1);
  const auto& pr = rep.pairs[0];
  CHECK(pr.agreement == "PASS");
  CHECK(pr.has_expected);
  CHECK(pr.expected_ok);
  for (const char* m : {"gauss", "degree", "reduce", "crossings"}) {
    const auto& r = result_of(pr, m);
    CHECK(r.status == "ok");
    CHECK(r.rounded == 1);
  }
}

TEST_CASE("lk gauss on the unlink scene is a tight zero") {
  cli::Options opt;
  opt.method = "gauss";
  const cli::RunReport rep = cli::run_lk(kScenesDir + "unlink.json", opt);
  CHECK(rep.exit_code == 0);
  const auto& r = result_of(rep.pairs[0], "gauss");
  CHECK(r.rounded == 0);
  CHECK(r.residual < 1e-8);
}

TEST_CASE("lk propagates input errors") {
  cli::Options opt;
  CHECK_THROWS_AS(cli::run_lk("/no/such/file.json", opt), SceneParseError);
  opt.pair = "g1,zzz";
  CHECK_THROWS_AS(cli::run_lk(kScenesDir + "hopf.json", opt), Error);
  opt.pair = "";
  opt.method = "magic";
  CHECK_THROWS_AS(cli::run_lk(kScenesDir + "hopf.json", opt), Error);
}

TEST_CASE("verify passes on the full shipped suite") {
  cli::Options opt;
  opt.tol = 1e-6;
  opt.max_nodes = 128;  // plenty for every builtin; keeps the 3-D grids small
  const cli::VerifyReport rep = cli::run_verify(
      {kScenesDir + "hopf.json", kScenesDir + "unlink.json",
       kScenesDir + "torus24.json", kScenesDir + "spun_pair.json",
       kScenesDir + "separated_pair.json"},
      opt);
  CHECK(rep.exit_code == 0);
  for (const auto& s : rep.scenes)
    for (const auto& pr : s.pairs) {
      CHECK(pr.agreement == "PASS");
      CHECK(pr.has_expected);
      CHECK(pr.expected_ok);
    }
}

TEST_CASE("verify flags a wrong expected value and names the pair") {
  const std::string path = "/tmp/linkint_wrong_expected.json";
  {
    std::ofstream out(path);
    out << R"({"ambient_dim": 3, "objects": [
      {"name": "g1", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 0, 0, 0]},
      {"name": "g2", "kind": "builtin", "family": "circle", "params": [0, 2, 1.0, 1, 0, 0]}
    ], "expected": [{"pair": ["g1", "g2"], "value": -3}]})";
  }
  cli::Options opt;
  const cli::VerifyReport rep = cli::run_verify({path}, opt);
  CHECK(rep.exit_code == 2);
  const std::string text = cli::render_human(rep);
  CHECK(text.find("failing pair") != std::string::npos);
  CHECK(text.find("g1") != std::string::npos);
}

TEST_CASE("R^4 scenes skip gauss with a note and run degree plus reduce") {
  cli::Options opt;
  opt.max_nodes = 128;
  opt.tol = 1e-6;
  const cli::RunReport rep = cli::run_lk(kScenesDir + "spun_pair.json", opt);
  const auto& pr = rep.pairs[0];
  CHECK(result_of(pr, "gauss").status == "skipped");
  CHECK(result_of(pr, "gauss").note.find("not applicable") != std::string::npos);
  CHECK(result_of(pr, "crossings").status == "skipped");
  CHECK(result_of(pr, "degree").status == "ok");
  CHECK(result_of(pr, "degree").rounded == 1);
  CHECK(result_of(pr, "reduce").status == "ok");
  CHECK(result_of(pr, "reduce").rounded == 1);
  CHECK(pr.agreement == "PASS");
  CHECK(rep.exit_code == 0);
}

TEST_CASE("convergence rows decay and the csv header is pinned") {
  cli::Options opt;
  const cli::ConvergenceReport rep =
      cli::run_convergence(kScenesDir + "hopf.json", "g1,g2", "gauss", "16..256", opt);
  REQUIRE(rep.rows.size() == 5);
  for (size_t i = 2; i < rep.rows.size(); ++i)
    CHECK(rep.rows[i].abs_error_vs_final <= rep.rows[i - 1].abs_error_vs_final + 1e-15);
  CHECK(rep.rows.back().abs_error_vs_final < 1e-6);
  for (const auto& row : rep.rows) CHECK(row.evaluations == row.nodes * row.nodes);

  const std::string csv = cli::render_csv(rep);
  CHECK(csv.rfind("nodes,value,abs_error_vs_final,wall_ms\n", 0) == 0);

  CHECK_THROWS_AS(
      cli::run_convergence(kScenesDir + "hopf.json", "g1,g2", "gauss", "", opt), Error);
  CHECK_THROWS_AS(cli::run_convergence(kScenesDir + "hopf.json", "g1,g2",
                                       "crossings", "16..64", opt),
                  Error);
}

TEST_CASE("reduce reaches the target with far fewer evaluations than gauss") {
  cli::Options opt;
  const auto gauss =
      cli::run_convergence(kScenesDir + "hopf.json", "g1,g2", "gauss", "16..512", opt);
  const auto reduce =
      cli::run_convergence(kScenesDir + "hopf.json", "g1,g2", "reduce", "16..512", opt);
  auto evals_to = [](const cli::ConvergenceReport& r, double target) {
    long long total = 0;
    for (const auto& row : r.rows) {
      total += row.evaluations;
      if (row.abs_error_vs_final <= target) return total;
    }
    return static_cast<long long>(-1);
  };
  const long long eg = evals_to(gauss, 1e-6);
  const long long er = evals_to(reduce, 1e-6);
  REQUIRE(eg > 0);
  REQUIRE(er > 0);
  CHECK(er < eg);
}

TEST_CASE("gamma table stays below 1e-9 and validates input") {
  const cli::GammaReport rep = cli::run_gamma("1..6", {1.0});
  CHECK(rep.rows.size() == 6);
  for (const auto& row : rep.rows) CHECK(row.diff < 1e-9);
  CHECK_THROWS_AS(cli::run_gamma("1..6", {-1.0}), Error);
  CHECK_THROWS_AS(cli::run_gamma("", {1.0}), Error);
}

TEST_CASE("machine output is byte-identical across runs and worker counts") {
  cli::Options opt;
  opt.method = "all";
  opt.json = true;
  setenv("LK_WORKERS", "1", 1);
  const std::string a = cli::render_json(cli::run_lk(kScenesDir + "hopf.json", opt));
  setenv("LK_WORKERS", "3", 1);
  const std::string b = cli::render_json(cli::run_lk(kScenesDir + "hopf.json", opt));
  unsetenv("LK_WORKERS");
  const std::string c = cli::render_json(cli::run_lk(kScenesDir + "hopf.json", opt));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.find("wall") == std::string::npos);  // no timestamps in machine mode
}

TEST_CASE("binary exit-code contract") {
  CHECK(run_cli("lk " + kScenesDir + "hopf.json --method all") == 0);
  CHECK(run_cli("lk /no/such/scene.json") == 1);
  CHECK(run_cli("lk " + kScenesDir + "hopf.json --method magic") == 1);

  const std::string path = "/tmp/linkint_wrong_expected2.json";
  {
    std::ofstream out(path);
    out << R"({"ambient_dim": 3, "objects": [
      {"name": "g1", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 0, 0, 0]},
      {"name": "g2", "kind": "builtin", "family": "circle", "params": [0, 2, 1.0, 1, 0, 0]}
    ], "expected": [{"pair": ["g1", "g2"], "value": 7}]})";
  }
  CHECK(run_cli("verify " + path) == 2);
  CHECK(run_cli("gamma --p 1..3") == 0);
  CHECK(run_cli("convergence " + kScenesDir + "hopf.json --pair g1,g2 "
                "--method gauss --schedule 16..64") == 0);
}
