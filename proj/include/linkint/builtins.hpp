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

#include <string>
#include <vector>

#include "linkint/geometry.hpp"

namespace linkint {

/// Circle of radius r in the coordinate plane spanned by axes (i, j),
/// centered at `center`: center + r cos(2 pi t) e_i + r sin(2 pi t) e_j.
ClosedCurve circle_curve(const Vec& center, double radius, int axis_i, int axis_j);

/// Curve on the tube of radius rho around the unit circle in the plane
/// x3 = 0, winding once around the axis and `wraps` times around the tube.
/// Links the core circle `wraps` times.
ClosedCurve torus_cable_curve(int wraps, double rho, double major_radius = 1.0);

/// (p,q) torus knot on the torus with the given radii (R^3).
ClosedCurve torus_knot_curve(int p, int q, double major_radius, double minor_radius);

/// Unit 2-sphere chart with poles along the second embedding axis:
///   center + r (sin(pi u) cos(2 pi v), cos(pi u), sin(pi u) sin(2 pi v), 0, ...)
/// The chart's u direction is non-periodic with vanishing Jacobian at the
/// poles; v is periodic. Ambient dimension from `center`.
PatchManifold sphere_patch(const Vec& center, double radius);

/// Torus of revolution in R^4: tube circle in the (radial, x4) plane,
///   ((R + r cos 2 pi v) cos 2 pi u, (R + r cos 2 pi v) sin 2 pi u, 0, r sin 2 pi v).
PatchManifold torus_r4_patch(double major_radius, double minor_radius);

/// Builtin scene families:
///   unlink_r3          two unit circles separated by a plane
///   hopf_r3            gamma1 = unit circle in x3=0 at origin,
///                      gamma2 = unit circle in x2=0 at (1,0,0)
///   torus_link_r3      params {a, b}, a | b: two-component (a,b)-style torus
///                      link authored in reduced position (planar core plus a
///                      (1, b/a) cable); |lk| = b/a. Defaults to (2,4).
///   spun_pair_r4       N = unit 2-sphere in x4=0, M = circle (1+cos,0,0,sin)
///   separated_pair_r4  same pair with the circle moved across x1 = 3
/// Throws UnknownFamily for anything else.
Scene builtin_scene(const std::string& name, const std::vector<double>& params = {});

const std::vector<std::string>& builtin_scene_names();

}  // namespace linkint
