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

#include "linkint/invariants.hpp"

namespace linkint {

/// Transverse crossing of a curve with an axis-aligned plane: where, which
/// way through, and at which curve parameter.
struct IntersectionPoint {
  Vec location;       // on the plane (pinned coordinate snapped exactly)
  int sign = 0;       // sign of the pinned coordinate's derivative at the root
  double parameter = 0.0;
};

/// One connected component of a hyperplane slice. `sign` is the orientation
/// weight of this component in the reduced sum: the parameter-plane
/// determinant of (contour tangent, transverse gradient) times the row
/// permutation parity of moving the pinned coordinate last.
struct SliceCurve {
  ClosedCurve curve;  // lives in the hyperplane (pinned coordinate constant)
  int sign = 0;
};

/// All transverse crossings of a closed curve with the plane {x_k = value},
/// found by sign-change bracketing on `scan_samples` uniform samples followed
/// by bisection to |x_k - value| < 1e-12. Throws NonTransverse on grazing
/// contact or a coordinate derivative below 1e-6 at a root. The returned
/// count is even and the signs sum to zero for any closed transverse curve.
std::vector<IntersectionPoint> find_plane_intersections(
    const ClosedCurve& c, const Hyperplane& h, int scan_samples = 1024,
    long long* eval_count = nullptr);

/// The winding-number form of the linking integral: the planar curve must lie
/// in {x3 = 0}; the transverse curve pierces it in finitely many points p_i.
/// Equals gauss_linking_r3(planar, transverse) by the projection theorem.
LinkingResult reduced_linking_curves(const ClosedCurve& planar,
                                     const ClosedCurve& transverse,
                                     double tol = 1e-8);

/// Marching-squares slice of a parameterized surface (n = 2) by the
/// hyperplane {x_k = value}: contours of x_k on a grid x grid parameter mesh,
/// chained into closed loops, root-polished onto the plane, and resampled as
/// periodic cubic curves. Saddle cells are resolved by the cell-center value.
/// Throws OpenContour when a contour ends on a non-periodic chart boundary.
std::vector<SliceCurve> slice_surface(const PatchManifold& N, const Hyperplane& h,
                                      int grid = 512);

/// Reduced linking integral inside the hyperplane: the signed sum over slice
/// components of the degree integral between M and the component, computed in
/// the hyperplane's own coordinates.
LinkingResult reduced_linking_general(const PatchManifold& M,
                                      const std::vector<SliceCurve>& slices,
                                      const Hyperplane& h, double tol = 1e-8);

struct HomotopyReport {
  bool passed = false;
  std::vector<double> lambdas;
  std::vector<LinkingResult> values;
};

/// Evaluates the linking number along a one-parameter family of scenes and
/// checks that the rounded value never moves and every residual stays below
/// 1e-3. Disjointness violations identify the breaking parameter.
HomotopyReport homotopy_invariance_check(
    const std::function<Scene(double)>& family, int samples, double tol = 1e-8);

}  // namespace linkint
