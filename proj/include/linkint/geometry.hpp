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

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linkint/types.hpp"

namespace linkint {

/// Smooth closed parametric curve in R^d, parameter t in [0,1) with period 1.
/// Immutable after construction; evaluation is pure and thread-safe.
class ClosedCurve {
 public:
  ClosedCurve() = default;

  static ClosedCurve analytic(int dim, std::function<Vec(double)> pos,
                              std::function<Vec(double)> vel,
                              std::string source = "analytic");

  /// Periodic cubic interpolation through the samples (taken at k/n).
  static ClosedCurve from_samples(const std::vector<Vec>& vertices);

  Vec eval(double t) const { return pos_(wrap_unit(t)); }
  Vec deriv(double t) const { return vel_(wrap_unit(t)); }

  int dim() const { return dim_; }
  const std::string& source() const { return source_; }

  /// Same image, opposite orientation.
  ClosedCurve reversed() const;

 private:
  int dim_ = 0;
  std::function<Vec(double)> pos_;
  std::function<Vec(double)> vel_;
  std::string source_;
};

/// Map [0,1]^n -> R^d with per-coordinate periodicity flags and analytic
/// Jacobian columns. Only n = 1 and n = 2 occur in this engine. For n = 1 the
/// second parameter is ignored. A non-periodic direction is allowed only when
/// the chart degenerates there to a closed image (sphere poles); such charts
/// set pole_degenerate.
struct PatchManifold {
  int intrinsic_dim = 0;
  int ambient_dim = 0;
  std::array<bool, 2> periodic{true, true};
  bool pole_degenerate = false;
  std::function<Vec(double, double)> pos;
  std::function<std::array<Vec, 2>(double, double)> jac;
  std::string source;

  Vec eval(double u, double v = 0.0) const;
  std::array<Vec, 2> jacobian(double u, double v = 0.0) const;

  static PatchManifold from_curve(const ClosedCurve& c);
};

/// Closed polygonal chain; the last vertex connects back to the first.
struct Polyline {
  std::vector<Vec> vertices;

  int dim() const { return vertices.empty() ? 0 : vertices[0].dim(); }
  size_t size() const { return vertices.size(); }
};

/// Axis-aligned affine subspace: the coordinates in `fixed` are pinned.
/// General position is reached by pre-applying an Isometry to the scene.
struct Hyperplane {
  struct FixedCoord {
    int index;     // 0-based ambient coordinate
    double value;
  };
  std::vector<FixedCoord> fixed;

  static Hyperplane single(int index, double value) { return {{{index, value}}}; }
  int codim() const { return static_cast<int>(fixed.size()); }
};

/// Rigid motion of R^d: proper rotation plus translation.
class Isometry {
 public:
  Isometry() = default;
  /// Validates orthogonality to 1e-12 and det = +1.
  Isometry(int dim, std::vector<double> rotation_row_major, Vec translation);

  static Isometry identity(int dim);
  static Isometry translation(const Vec& t);
  static Isometry random_rotation(int dim, std::mt19937_64& rng);
  /// Random rotation whose matrix fixes coordinate `axis` (so it maps any
  /// hyperplane {x_axis = c} to itself).
  static Isometry random_rotation_fixing(int dim, int axis, std::mt19937_64& rng);

  int dim() const { return dim_; }
  Vec apply(const Vec& p) const;
  Vec rotate(const Vec& v) const;  // rotation only, for tangents

 private:
  int dim_ = 0;
  std::vector<double> rot_;  // row-major dim x dim
  Vec trans_;
};

struct SceneObject {
  std::string name;
  std::variant<ClosedCurve, PatchManifold> geometry;

  bool is_curve() const { return std::holds_alternative<ClosedCurve>(geometry); }
  const ClosedCurve& curve() const { return std::get<ClosedCurve>(geometry); }
  const PatchManifold& patch() const { return std::get<PatchManifold>(geometry); }
  int ambient_dim() const;
  int intrinsic_dim() const { return is_curve() ? 1 : patch().intrinsic_dim; }
  /// Point sample at parameters wrapped into [0,1).
  Vec sample(double u, double v = 0.0) const;
};

struct ExpectedValue {
  std::string a, b;
  double value = 0.0;
  std::string provenance;
};

/// Named collection of disjoint objects sharing one ambient dimension,
/// optionally with declared expected linking values.
struct Scene {
  std::string name;
  int ambient_dim = 0;
  std::vector<SceneObject> objects;
  std::vector<ExpectedValue> expected;

  const SceneObject& object(std::string_view name) const;
  bool has_object(std::string_view name) const;
};

// -- operations ---------------------------------------------------------

Vec eval_curve(const ClosedCurve& c, double t);

/// Derivative vector at t; throws ImmersionFailure when |result| < 1e-9.
Vec tangent(const ClosedCurve& c, double t);

/// Vertices at t = k/n, n >= 8.
Polyline sample_polyline(const ClosedCurve& c, int n);

ClosedCurve apply_isometry(const ClosedCurve& c, const Isometry& g);
PatchManifold apply_isometry(const PatchManifold& p, const Isometry& g);
Scene apply_isometry(const Scene& s, const Isometry& g);

/// Minimum distance between two objects over a uniform parameter sampling.
double min_pair_distance(const SceneObject& a, const SceneObject& b,
                         int samples_per_dim = 256);

/// Throws DisjointnessViolation if any sampled pairwise distance is <= 1e-6.
void check_scene_disjoint(const Scene& s, int samples_per_dim = 256);

inline constexpr double kDisjointnessThreshold = 1e-6;

}  // namespace linkint
