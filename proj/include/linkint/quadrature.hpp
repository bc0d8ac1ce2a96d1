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

#include <functional>
#include <span>
#include <vector>

#include "linkint/types.hpp"

namespace linkint {

/// Outcome of an error-estimated quadrature run. `error_estimate` is the
/// absolute change produced by the last node doubling.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::vector<int> nodes_per_dim;
  int refinements = 0;
  long long evaluations = 0;  // total integrand samples consumed
};

/// Refinement hit max_nodes before |delta| < tol; carries the best run so the
/// caller can decide what to do with it.
class ToleranceNotReached : public Error {
 public:
  ToleranceNotReached(const std::string& msg, QuadratureResult best_run)
      : Error(msg), best(std::move(best_run)) {}
  QuadratureResult best;
};

/// Gauss-Legendre nodes and weights on [0,1]; cached per n, thread-safe.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

using BoxIntegrand = std::function<double(std::span<const double>)>;

/// Tensor-product rule over [0,1]^k: periodic dimensions use the periodic
/// trapezoidal rule (nodes at i/n, equal weights), non-periodic dimensions
/// Gauss-Legendre. Throws NonFiniteSample with the offending node.
double integrate_box(const BoxIntegrand& f, std::span<const bool> periodic,
                     std::span<const int> nodes);

/// Doubles the node count in every dimension simultaneously until the value
/// changes by less than tol. Throws ToleranceNotReached carrying the best run.
QuadratureResult refine_until(const BoxIntegrand& f, std::span<const bool> periodic,
                              double tol, int start_nodes = 16, int max_nodes = 4096);

/// Integral of g over the whole real line via the substitution z = tan(theta),
/// for even-decay integrands g(z) ~ |z|^-q with q >= 2. Gauss-Legendre on the
/// transformed interval, refined to `tol`.
double integral_even_decay(const std::function<double(double)>& g,
                           double decay_exponent, double tol = 1e-12);

namespace detail {

/// Fixed-node variant of integral_even_decay, used where the caller manages
/// refinement (nested tail integrals).
double integral_even_decay_fixed(const std::function<double(double)>& g, int nodes);

struct DoublingRun {
  double value = 0.0;
  double last_delta = 0.0;
  int final_nodes = 0;
  int refinements = 0;
  bool converged = false;
};

/// Shared doubling driver: evaluates eval(n) at n = start, 2*start, ... until
/// |delta| < tol or n would exceed max_nodes.
DoublingRun refine_doubling(const std::function<double(int)>& eval, double tol,
                            int start_nodes, int max_nodes);

}  // namespace detail

}  // namespace linkint
