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

#include "linkint/geometry.hpp"

namespace linkint {
namespace oracles {

/// Signed count of crossings of the horizontal ray from q (toward +x) with
/// the closed polyline: up-crossing +1, down-crossing -1, half-open vertex
/// rule. Integral-free winding number oracle.
int raycast_winding(const Polyline& p, const Point& q);

/// Combinatorial linking number from a generic projection along `dir`: half
/// the sum of signed inter-component crossings. The crossing sign combines
/// the projected direction determinant with over/under depth, oriented so the
/// result matches the engine's Gauss-integral convention. Throws
/// NonGenericProjection when the projection has parallel segment pairs,
/// vertex-on-segment incidences, or depth ties (caller perturbs and retries).
int crossing_sign_linking(const Polyline& p1, const Polyline& p2, const Vec& dir);

/// Retry wrapper: draws random directions until the projection is generic
/// (up to max_tries, then rethrows the last NonGenericProjection).
int crossing_sign_linking_auto(const Polyline& p1, const Polyline& p2,
                               std::mt19937_64& rng, int max_tries = 20);

/// Numeric side of the tail identity: integral over R of dz/(a+z^2)^{(p+1)/2}
/// via the tangent substitution.
double gamma_identity_lhs(int p, double a);

struct GammaRhs {
  double value;              // sqrt(pi)/a^{p/2} * Gamma(p/2)/Gamma((p+1)/2)
  double sphere_volume_form; // vol S^p / vol S^{p-1} / a^{p/2}
};

/// Closed form of the same integral, evaluated through log-Gamma, plus the
/// sphere-volume form of the same quantity; both must agree to 1e-12.
GammaRhs gamma_identity_rhs(int p, double a);

struct IteratedTail {
  double numeric;
  double closed_form;  // vol S^p / vol S^{p-k} / rho^{p-k+1}
};

/// k-fold tail integral over R^k of (rho^2 + sum t_i^2)^{-(p+1)/2}: nested
/// 1-D tangent-substitution quadrature against the induction closed form.
/// Requires k <= 3 and p - k >= 1.
IteratedTail iterated_tail_identity(int p, int k, double rho);

}  // namespace oracles
}  // namespace linkint
