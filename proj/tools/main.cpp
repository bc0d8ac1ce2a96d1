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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "linkint/cli.hpp"
#include "linkint/types.hpp"

namespace {

void add_common(CLI::App* cmd, linkint::cli::Options& opt) {
  cmd->add_option("--tol", opt.tol, "refinement tolerance (default 1e-8)");
  cmd->add_option("--max-nodes", opt.max_nodes,
                  "cap on nodes per dimension (default: per-method)");
  cmd->add_option("--grid", opt.grid, "slice mesh resolution (default 512)");
  cmd->add_option("--seed", opt.seed, "seed for projection directions (default 0)");
  cmd->add_flag("--json", opt.json, "line-delimited JSON instead of human text");
}

void write_csv(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw linkint::Error("cannot write CSV file '" + path + "'");
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linking numbers by quadrature, hyperplane reduction, and "
               "combinatorial oracles"};
  app.require_subcommand(1);

  linkint::cli::Options opt;
  std::string scene_path, pair_spec, method = "all", schedule = "16..1024";
  std::vector<std::string> scene_paths;
  std::string p_range = "1..6";
  std::vector<double> a_list = {0.5, 1.0, 2.0};

  CLI::App* lk = app.add_subcommand("lk", "linking number of one pair");
  lk->add_option("scene", scene_path, "scene JSON file or builtin:<name>")->required();
  lk->add_option("--pair", opt.pair, "object pair a,b (default: first two)");
  lk->add_option("--method", opt.method, "gauss|degree|reduce|crossings|all");
  add_common(lk, opt);

  CLI::App* verify = app.add_subcommand("verify", "all methods on all pairs");
  verify->add_option("scenes", scene_paths, "scene files and/or builtin:<name>")
      ->required();
  add_common(verify, opt);

  CLI::App* conv = app.add_subcommand("convergence", "node-schedule study");
  conv->add_option("scene", scene_path, "scene JSON file or builtin:<name>")->required();
  conv->add_option("--pair", pair_spec, "object pair a,b (default: first two)");
  conv->add_option("--method", method, "gauss|degree|reduce")->required();
  conv->add_option("--schedule", schedule, "doubling list, e.g. 16..1024");
  conv->add_option("--csv", opt.csv_path, "also write CSV to this path");
  add_common(conv, opt);

  CLI::App* gamma = app.add_subcommand("gamma", "tail-identity table");
  gamma->add_option("--p", p_range, "p range, e.g. 1..6");
  gamma->add_option("--a", a_list, "a values (default 0.5 1 2)");
  gamma->add_flag("--json", opt.json, "line-delimited JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lk->parsed()) {
      const auto report = linkint::cli::run_lk(scene_path, opt);
      std::cout << (opt.json ? linkint::cli::render_json(report)
                             : linkint::cli::render_human(report));
      return report.exit_code;
    }
    if (verify->parsed()) {
      const auto report = linkint::cli::run_verify(scene_paths, opt);
      std::cout << (opt.json ? linkint::cli::render_json(report)
                             : linkint::cli::render_human(report));
      return report.exit_code;
    }
    if (conv->parsed()) {
      const auto report =
          linkint::cli::run_convergence(scene_path, pair_spec, method, schedule, opt);
      if (!opt.csv_path.empty()) write_csv(opt.csv_path, linkint::cli::render_csv(report));
      if (opt.json)
        std::cout << linkint::cli::render_json(report);
      else if (opt.csv_path.empty())
        std::cout << linkint::cli::render_csv(report);
      else
        std::cout << linkint::cli::render_human(report);
      return report.exit_code;
    }
    if (gamma->parsed()) {
      const auto report = linkint::cli::run_gamma(p_range, a_list);
      std::cout << (opt.json ? linkint::cli::render_json(report)
                             : linkint::cli::render_human(report));
      return report.exit_code;
    }
  } catch (const linkint::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
