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
#include "linkint/quadrature.hpp"

namespace linkint {

/// A linking-type invariant: the raw quadrature value, the nearest integer,
/// and how far apart they are. Certified means the integral pinned down the
/// integer to better than 1e-3.
struct LinkingResult {
  double raw = 0.0;
  long long rounded = 0;
  double residual = 0.0;
  QuadratureResult quadrature;

  bool certified() const { return residual < 1e-3; }
};

LinkingResult make_linking_result(double raw, QuadratureResult q);

/// Volume (surface measure) of the unit p-sphere: 2 pi^{(p+1)/2} / Gamma((p+1)/2).
double sphere_volume(int p);

/// Gauss linking integral in R^3 under the fixed convention
///   lk = (1/4 pi) iint det(r, c1', c2') ds dt / ||r||^3,   r = c2 - c1,
/// refined by doubling both node counts until |delta| < tol.
LinkingResult gauss_linking_r3(const ClosedCurve& c1, const ClosedCurve& c2,
                               double tol = 1e-8, int start_nodes = 16,
                               int max_nodes = 1024);

/// Degree-form linking integral for M^m, N^n in R^{m+n+1}:
///   lk = (1/vol S^p) int det(r, dM columns, dN columns) / ||r||^{p+1},
/// with r pointing from M toward N so that m = n = 1 reproduces
/// gauss_linking_r3 exactly. Supported: (m,n) in {(1,1), (1,2), (2,1)}.
LinkingResult degree_linking(const PatchManifold& M, const PatchManifold& N,
                             double tol = 1e-8, int start_nodes = 16,
                             int max_nodes = 256);

/// Winding number of a planar closed curve about p:
///   w = (1/2 pi) oint det(c(s) - p, c'(s)) ds / ||c(s) - p||^2,
/// counterclockwise positive.
LinkingResult winding_number(const ClosedCurve& c, const Point& p,
                             double tol = 1e-8, int start_nodes = 16,
                             int max_nodes = 4096);

// Single fixed-node passes of the same integrals (no refinement, no input
// checks). These are what the refining drivers call per doubling; convergence
// studies use them directly.
double gauss_linking_r3_pass(const ClosedCurve& c1, const ClosedCurve& c2, int nodes);
double degree_linking_pass(const PatchManifold& M, const PatchManifold& N, int nodes);
double winding_number_pass(const ClosedCurve& c, const Point& p, int nodes);

}  // namespace linkint
