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

#include "linkint/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace linkint {

namespace {

// Newton iteration on the Legendre polynomial, exploiting node symmetry.
GaussLegendreRule compute_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    // map from [-1,1] to [0,1]
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = 1.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double integrate_box(const BoxIntegrand& f, std::span<const bool> periodic,
                     std::span<const int> nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 0 || static_cast<int>(periodic.size()) != k)
    throw Error("integrate_box: dimension mismatch");
  for (int d = 0; d < k; ++d)
    if (nodes[d] < 8) throw Error("integrate_box: need >= 8 nodes per dimension");

  std::vector<const GaussLegendreRule*> gl(k, nullptr);
  for (int d = 0; d < k; ++d)
    if (!periodic[d]) gl[d] = &gauss_legendre(nodes[d]);

  std::vector<int> idx(k, 0);
  std::vector<double> x(k);
  double sum = 0.0;
  for (;;) {
    double w = 1.0;
    for (int d = 0; d < k; ++d) {
      if (periodic[d]) {
        x[d] = static_cast<double>(idx[d]) / nodes[d];
        w /= nodes[d];
      } else {
        x[d] = gl[d]->nodes[idx[d]];
        w *= gl[d]->weights[idx[d]];
      }
    }
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      std::ostringstream os;
      os << "integrate_box: non-finite sample at (";
      for (int d = 0; d < k; ++d) os << (d ? ", " : "") << x[d];
      os << ")";
      throw NonFiniteSample(os.str(), x);
    }
    sum += w * fx;
    // odometer over the tensor grid, last dimension fastest
    int d = k - 1;
    while (d >= 0 && ++idx[d] == nodes[d]) idx[d--] = 0;
    if (d < 0) break;
  }
  return sum;
}

QuadratureResult refine_until(const BoxIntegrand& f, std::span<const bool> periodic,
                              double tol, int start_nodes, int max_nodes) {
  if (tol <= 0) throw Error("refine_until: tol must be positive");
  if (start_nodes < 8) throw Error("refine_until: start_nodes must be >= 8");
  if (max_nodes > 4096) throw Error("refine_until: max_nodes capped at 4096 per dim");
  const int k = static_cast<int>(periodic.size());

  QuadratureResult result;
  long long evals = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (int n = start_nodes; n <= max_nodes; n *= 2) {
    std::vector<int> nodes(k, n);
    const double value = integrate_box(f, periodic, nodes);
    long long cnt = 1;
    for (int d = 0; d < k; ++d) cnt *= n;
    evals += cnt;
    if (have_prev) {
      result.error_estimate = std::abs(value - prev);
      ++result.refinements;
    }
    result.value = value;
    result.nodes_per_dim = nodes;
    result.evaluations = evals;
    if (have_prev && result.error_estimate < tol) return result;
    prev = value;
    have_prev = true;
  }
  throw ToleranceNotReached("refine_until: |delta| = " +
                                std::to_string(result.error_estimate) + " still above tol " +
                                std::to_string(tol) + " at " +
                                std::to_string(result.nodes_per_dim.empty()
                                                   ? 0
                                                   : result.nodes_per_dim[0]) +
                                " nodes/dim",
                            result);
}

double integral_even_decay(const std::function<double(double)>& g,
                           double decay_exponent, double tol) {
  if (decay_exponent < 2.0)
    throw Error("integral_even_decay: decay exponent must be >= 2");
  auto eval = [&](int n) { return detail::integral_even_decay_fixed(g, n); };
  auto run = detail::refine_doubling(eval, tol, 32, 4096);
  if (!run.converged)
    throw ToleranceNotReached(
        "integral_even_decay did not converge",
        QuadratureResult{run.value, run.last_delta, {run.final_nodes}, run.refinements, 0});
  return run.value;
}

namespace detail {

double integral_even_decay_fixed(const std::function<double(double)>& g, int nodes) {
  const auto& rule = gauss_legendre(nodes);
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double theta = std::numbers::pi * (rule.nodes[i] - 0.5);
    const double c = std::cos(theta);
    const double z = std::tan(theta);
    const double fx = g(z) / (c * c);
    if (!std::isfinite(fx))
      throw NonFiniteSample(
          "integral_even_decay: non-finite transformed sample (decay too slow?)",
          {theta});
    sum += std::numbers::pi * rule.weights[i] * fx;
  }
  return sum;
}

DoublingRun refine_doubling(const std::function<double(int)>& eval, double tol,
                            int start_nodes, int max_nodes) {
  DoublingRun run;
  double prev = 0.0;
  bool have_prev = false;
  for (int n = start_nodes; n <= max_nodes; n *= 2) {
    run.value = eval(n);
    run.final_nodes = n;
    if (have_prev) {
      run.last_delta = std::abs(run.value - prev);
      ++run.refinements;
      if (run.last_delta < tol) {
        run.converged = true;
        return run;
      }
    }
    prev = run.value;
    have_prev = true;
  }
  return run;
}

}  // namespace detail

}  // namespace linkint
