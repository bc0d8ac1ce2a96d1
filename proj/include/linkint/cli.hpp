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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkint/geometry.hpp"

namespace linkint::cli {

struct Options {
  double tol = 1e-8;
  int max_nodes = 0;  // 0 = per-method default (gauss 1024, degree 256)
  int grid = 512;     // slice mesh
  std::uint64_t seed = 0;
  bool json = false;
  std::string csv_path;
  std::string pair;            // "a,b"; empty = first pair (lk) / all pairs (verify)
  std::string method = "all";  // lk only
};

struct MethodResult {
  std::string method;
  std::string status;  // "ok" | "skipped" | "error"
  std::string note;
  double raw = 0.0;
  long long rounded = 0;
  double residual = 0.0;
  bool certified = false;
  std::vector<int> nodes;
  long long evaluations = 0;
  double wall_ms = 0.0;
  std::vector<std::string> warnings;
};

struct PairReport {
  std::string a, b;
  std::vector<MethodResult> results;
  bool has_expected = false;
  double expected = 0.0;
  bool expected_ok = true;
  std::string agreement;  // "PASS" | "FAIL"
};

struct RunReport {
  std::string scene;
  std::vector<PairReport> pairs;
  int exit_code = 0;
};

struct VerifyReport {
  std::vector<RunReport> scenes;
  int exit_code = 0;
};

struct ConvergenceRow {
  int nodes = 0;
  double value = 0.0;
  double abs_error_vs_final = 0.0;
  double wall_ms = 0.0;
  long long evaluations = 0;
};

struct ConvergenceReport {
  std::string scene, a, b, method;
  std::vector<ConvergenceRow> rows;
  double reference = 0.0;
  int exit_code = 0;
};

struct GammaRow {
  int p = 0;
  double a = 0.0, lhs = 0.0, rhs = 0.0, diff = 0.0;
};

struct GammaReport {
  std::vector<GammaRow> rows;
  int exit_code = 0;
};

/// Computes the selected method(s) on one pair of a scene. Exit codes:
/// 0 computed/PASS, 2 method disagreement or failure, 1 input error (thrown
/// as linkint::Error by the loaders and surfaced by the tool).
RunReport run_lk(const std::string& scene_path, const Options& opt);

/// Every applicable method on every pair of every scene, checked against the
/// scenes' declared expected values.
VerifyReport run_verify(const std::vector<std::string>& scene_paths,
                        const Options& opt);

/// Fixed node schedule for one (pair, method); rows carry single-pass values,
/// errors against a finer reference, and integrand evaluation counts.
ConvergenceReport run_convergence(const std::string& scene_path,
                                  const std::string& pair,
                                  const std::string& method,
                                  const std::string& schedule, const Options& opt);

/// Tail-identity table over a range of p and a list of a values.
GammaReport run_gamma(const std::string& p_range, const std::vector<double>& a_list);

std::string render_human(const RunReport& r);
std::string render_human(const VerifyReport& r);
std::string render_human(const ConvergenceReport& r);
std::string render_human(const GammaReport& r);

/// Line-delimited JSON; byte-identical across identical invocations (no
/// timestamps or wall times in machine output).
std::string render_json(const RunReport& r);
std::string render_json(const VerifyReport& r);
std::string render_json(const ConvergenceReport& r);
std::string render_json(const GammaReport& r);

/// CSV with header exactly `nodes,value,abs_error_vs_final,wall_ms`.
std::string render_csv(const ConvergenceReport& r);

}  // namespace linkint::cli
