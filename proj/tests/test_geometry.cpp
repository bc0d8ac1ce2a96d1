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

#include <numbers>
#include <random>

#include "linkint/builtins.hpp"
#include "linkint/geometry.hpp"
#include "linkint/spline.hpp"

using namespace linkint;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

std::vector<Vec> circle_samples(int n) {
  std::vector<Vec> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = kTau * i / n;
    pts.push_back(Vec{std::cos(t), std::sin(t), 0.0});
  }
  return pts;
}
}  // namespace

TEST_CASE("unit circle evaluation and periodic wrap") {
  const ClosedCurve c = circle_curve(Vec{0, 0, 0}, 1.0, 0, 1);
  const Vec p0 = eval_curve(c, 0.0);
  CHECK(p0[0] == doctest::Approx(1.0));
  CHECK(p0[1] == doctest::Approx(0.0));
  CHECK(p0[2] == doctest::Approx(0.0));

  const Vec pq = eval_curve(c, 0.25);
  CHECK(pq[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pq[1] == doctest::Approx(1.0));

  // exact wrap for dyadic parameters: same representative, bitwise equal
  const Vec a = eval_curve(c, 1.25);
  const Vec b = eval_curve(c, 0.25);
  for (int i = 0; i < 3; ++i) CHECK(a[i] == b[i]);

  // the doubles 1.3 and 0.3 + 1 are different reals, so wrap agreement is
  // only exact to one ulp of the parameter
  const Vec a2 = eval_curve(c, 1.3);
  const Vec b2 = eval_curve(c, 0.3);
  CHECK(norm(a2 - b2) < 1e-14);

  // closure within 1e-12 per coordinate
  const Vec end = eval_curve(c, 1.0 - 1e-13);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(end[i] - p0[i]) < 1e-11);
}

TEST_CASE("analytic tangent of builtins") {
  const ClosedCurve c = circle_curve(Vec{0, 0, 0}, 1.0, 0, 1);
  const Vec v = tangent(c, 0.0);
  CHECK(v[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(v[1] == doctest::Approx(kTau));
  CHECK(v[2] == doctest::Approx(0.0));
}

TEST_CASE("sampled curve reproduces the analytic tangent to 1e-4") {
  const ClosedCurve sampled = ClosedCurve::from_samples(circle_samples(1024));
  const Vec v = tangent(sampled, 0.0);
  CHECK(std::abs(v[0] - 0.0) < 1e-4);
  CHECK(std::abs(v[1] - kTau) < 1e-4);
  CHECK(std::abs(v[2]) < 1e-4);
}

TEST_CASE("degenerate constant curve fails immersion") {
  const ClosedCurve c = ClosedCurve::analytic(
      3, [](double) { return Vec{1, 2, 3}; }, [](double) { return Vec{0, 0, 0}; },
      "constant");
  CHECK_THROWS_AS(tangent(c, 0.3), ImmersionFailure);
}

TEST_CASE("finite differences match analytic tangents on builtins") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const ClosedCurve curves[] = {circle_curve(Vec{1, 0, 0}, 1.0, 0, 2),
                                torus_cable_curve(2, 0.35),
                                torus_knot_curve(2, 3, 2.0, 0.5)};
  const double h = 1e-6;
  for (const auto& c : curves) {
    for (int i = 0; i < 100; ++i) {
      const double t = u01(rng);
      const Vec fd = (1.0 / (2.0 * h)) * (c.eval(t + h) - c.eval(t - h));
      const Vec an = c.deriv(t);
      CHECK(norm(fd - an) / norm(an) < 1e-6);
    }
  }
}

TEST_CASE("sample_polyline vertices and preconditions") {
  const ClosedCurve c = circle_curve(Vec{0, 0, 0}, 1.0, 0, 1);
  const Polyline p = sample_polyline(c, 8);
  REQUIRE(p.size() == 8);
  CHECK(norm(p.vertices[0] - Vec{1, 0, 0}) < 1e-12);
  CHECK(norm(p.vertices[2] - Vec{0, 1, 0}) < 1e-12);
  CHECK_THROWS_AS(sample_polyline(c, 7), Error);

  const ClosedCurve flat = ClosedCurve::analytic(
      3, [](double) { return Vec{0, 0, 0}; }, [](double) { return Vec{0, 0, 0}; },
      "point");
  CHECK_THROWS_AS(sample_polyline(flat, 16), ImmersionFailure);
}

TEST_CASE("periodic cubic spline interpolates knots exactly") {
  const auto pts = circle_samples(64);
  const PeriodicCubicSpline s(pts);
  for (int i = 0; i < 64; ++i) {
    const Vec got = s.eval(static_cast<double>(i) / 64);
    CHECK(norm(got - pts[i]) < 1e-12);
  }
  // interpolation error between knots stays tiny for a smooth curve
  for (int i = 0; i < 64; ++i) {
    const double t = (i + 0.5) / 64;
    const Vec got = s.eval(t);
    const Vec want{std::cos(kTau * t), std::sin(kTau * t), 0.0};
    CHECK(norm(got - want) < 1e-6);
  }
}

TEST_CASE("isometries preserve distances and validate their input") {
  std::mt19937_64 rng(11);
  const Isometry g = Isometry::random_rotation(3, rng);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const Vec a{u(rng), u(rng), u(rng)};
    const Vec b{u(rng), u(rng), u(rng)};
    CHECK(std::abs(distance(g.apply(a), g.apply(b)) - distance(a, b)) < 1e-12);
  }

  // reflection (det -1) is rejected
  CHECK_THROWS_AS(Isometry(2, {1, 0, 0, -1}, Vec{0, 0}), Error);
  // non-orthogonal is rejected
  CHECK_THROWS_AS(Isometry(2, {1, 0.5, 0, 1}, Vec{0, 0}), Error);
}

TEST_CASE("identity isometry leaves a scene pointwise unchanged") {
  const Scene s = builtin_scene("hopf_r3");
  const Scene moved = apply_isometry(s, Isometry::identity(3));
  for (int i = 0; i < 32; ++i) {
    const double t = static_cast<double>(i) / 32;
    CHECK(norm(s.objects[0].sample(t) - moved.objects[0].sample(t)) == 0.0);
    CHECK(norm(s.objects[1].sample(t) - moved.objects[1].sample(t)) == 0.0);
  }
}

TEST_CASE("builtin scene families") {
  for (const auto& name : builtin_scene_names()) CHECK_NOTHROW(builtin_scene(name));
  CHECK_THROWS_AS(builtin_scene("klein_bottle"), UnknownFamily);
  CHECK_THROWS_AS(builtin_scene("torus_link_r3", {3, 4}), UnknownFamily);
  CHECK_NOTHROW(builtin_scene("torus_link_r3", {2, 4}));

  const Scene spun = builtin_scene("spun_pair_r4");
  CHECK(spun.ambient_dim == 4);
  CHECK(spun.object("m").is_curve());
  CHECK(!spun.object("n").is_curve());
  // the circle threads the sphere at constant distance 1
  CHECK(min_pair_distance(spun.object("m"), spun.object("n")) ==
        doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("scene disjointness check") {
  CHECK_NOTHROW(check_scene_disjoint(builtin_scene("hopf_r3")));

  Scene bad;
  bad.name = "touching";
  bad.ambient_dim = 3;
  bad.objects.push_back({"a", circle_curve(Vec{0, 0, 0}, 1.0, 0, 1)});
  bad.objects.push_back({"b", circle_curve(Vec{2, 0, 0}, 1.0, 0, 1)});
  CHECK_THROWS_AS(check_scene_disjoint(bad), DisjointnessViolation);
}

TEST_CASE("patch manifold from curve and sphere chart") {
  const PatchManifold sphere = sphere_patch(Vec{0, 0, 0, 0}, 1.0);
  CHECK(sphere.intrinsic_dim == 2);
  CHECK(sphere.pole_degenerate);
  // poles sit on the second embedding axis
  CHECK(norm(sphere.eval(0.0, 0.3) - Vec{0, 1, 0, 0}) < 1e-12);
  CHECK(norm(sphere.eval(1.0, 0.7) - Vec{0, -1, 0, 0}) < 1e-12);
  // Jacobian columns are tangent: radial component vanishes
  const auto jac = sphere.jacobian(0.37, 0.21);
  const Vec p = sphere.eval(0.37, 0.21);
  CHECK(std::abs(dot(jac[0], p)) < 1e-12);
  CHECK(std::abs(dot(jac[1], p)) < 1e-12);

  const PatchManifold pc = PatchManifold::from_curve(circle_curve(Vec{0, 0, 0}, 1, 0, 1));
  CHECK(pc.intrinsic_dim == 1);
  CHECK(norm(pc.eval(0.25) - Vec{0, 1, 0}) < 1e-12);
}
