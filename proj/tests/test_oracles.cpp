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

#include <cmath>
#include <numbers>
#include <random>

#include "linkint/builtins.hpp"
#include "linkint/invariants.hpp"
#include "linkint/oracles.hpp"
#include "linkint/random_scenes.hpp"

using namespace linkint;
using namespace linkint::oracles;

namespace {

Polyline square_around_origin() {
  Polyline p;
  p.vertices = {Vec{1, -1}, Vec{1, 1}, Vec{-1, 1}, Vec{-1, -1}};
  return p;
}

Polyline polygon_of(const ClosedCurve& c, int n, double phase = 0.0) {
  Polyline p;
  p.vertices.reserve(n);
  for (int i = 0; i < n; ++i) p.vertices.push_back(c.eval((i + phase) / n));
  return p;
}

}  // namespace

TEST_CASE("raycast winding of a square") {
  const Polyline sq = square_around_origin();
  CHECK(raycast_winding(sq, Vec{0, 0}) == 1);
  CHECK(raycast_winding(sq, Vec{5, 0}) == 0);
  CHECK_THROWS_AS(raycast_winding(sq, Vec{1, 0}), PointOnBoundary);
}

TEST_CASE("raycast winding of a doubly traversed circle") {
  const ClosedCurve c = circle_curve(Vec{0, 0}, 1.0, 0, 1);
  const ClosedCurve dbl = ClosedCurve::analytic(
      2, [c](double t) { return c.eval(2.0 * t); },
      [c](double t) { return 2.0 * c.deriv(2.0 * t); }, "doubled");
  CHECK(raycast_winding(polygon_of(dbl, 256), Vec{0, 0}) == 2);
}

TEST_CASE("raycast winding respects orientation") {
  const ClosedCurve c = circle_curve(Vec{0, 0}, 1.0, 0, 1);
  CHECK(raycast_winding(polygon_of(c, 64), Vec{0, 0}) == 1);
  CHECK(raycast_winding(polygon_of(c.reversed(), 64), Vec{0, 0}) == -1);
}

TEST_CASE("crossing oracle matches the gauss convention on builtins") {
  std::mt19937_64 rng(0);
  for (const auto& [name, want] :
       std::initializer_list<std::pair<const char*, int>>{
           {"hopf_r3", 1}, {"unlink_r3", 0}, {"torus_link_r3", 2}}) {
    const Scene s = builtin_scene(name);
    const Polyline p1 = polygon_of(s.object("g1").curve(), 256);
    const Polyline p2 = polygon_of(s.object("g2").curve(), 256, 0.381966);
    CHECK(crossing_sign_linking_auto(p1, p2, rng) == want);
  }
}

TEST_CASE("crossing oracle on plain sample_polyline output") {
  // hopf components live in different planes, so even phase-aligned polygons
  // project generically
  std::mt19937_64 rng(2);
  const Scene s = builtin_scene("hopf_r3");
  const Polyline p1 = sample_polyline(s.object("g1").curve(), 256);
  const Polyline p2 = sample_polyline(s.object("g2").curve(), 256);
  CHECK(crossing_sign_linking_auto(p1, p2, rng) == 1);
}

TEST_CASE("crossing oracle is independent of the projection direction") {
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Scene s = builtin_scene("torus_link_r3");
  const Polyline p1 = polygon_of(s.object("g1").curve(), 256);
  const Polyline p2 = polygon_of(s.object("g2").curve(), 256, 0.381966);
  int done = 0;
  while (done < 10) {
    const Vec dir{gauss(rng), gauss(rng), gauss(rng)};
    if (norm(dir) < 1e-3) continue;
    try {
      CHECK(crossing_sign_linking(p1, p2, dir) == 2);
      ++done;
    } catch (const NonGenericProjection&) {
      // perturb and retry
    }
  }
}

TEST_CASE("degenerate projections are rejected") {
  // Two axis-aligned squares at different heights project along z to exactly
  // parallel segment pairs.
  Polyline a, b;
  a.vertices = {Vec{1, -1, 0}, Vec{1, 1, 0}, Vec{-1, 1, 0}, Vec{-1, -1, 0}};
  b.vertices = {Vec{2, -1, 1}, Vec{2, 1, 1}, Vec{0, 1, 1}, Vec{0, -1, 1}};
  CHECK_THROWS_AS(crossing_sign_linking(a, b, Vec{0, 0, 1}), NonGenericProjection);
}

TEST_CASE("raycast winding equals the integral winding on random pairs") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int checked = 0;
  while (checked < 100) {
    const Scene s = random_planar_scene(rng);
    const ClosedCurve& g1 = s.object("g1").curve();
    const ClosedCurve flat = ClosedCurve::analytic(
        2,
        [g1](double t) {
          const Vec p = g1.eval(t);
          return Vec{p[0], p[1]};
        },
        [g1](double t) {
          const Vec v = g1.deriv(t);
          return Vec{v[0], v[1]};
        },
        "flat");
    const Polyline poly = polygon_of(flat, 512);
    for (int tries = 0; tries < 5 && checked < 100; ++tries) {
      const Vec q{u(rng), u(rng)};
      double dmin = std::numeric_limits<double>::infinity();
      for (const auto& v : poly.vertices) dmin = std::min(dmin, distance(v, q));
      if (dmin < 0.05) continue;
      CHECK(raycast_winding(poly, q) == winding_number(flat, q).rounded);
      ++checked;
    }
  }
}

TEST_CASE("tail identity: quadrature equals the closed form") {
  for (int p = 1; p <= 6; ++p) {
    for (double a : {0.5, 1.0, 2.0}) {
      const double lhs = gamma_identity_lhs(p, a);
      const GammaRhs rhs = gamma_identity_rhs(p, a);
      CHECK(std::abs(lhs - rhs.value) < 1e-9);
      CHECK(std::abs(rhs.value - rhs.sphere_volume_form) < 1e-12 * std::abs(rhs.value));
    }
  }
}

TEST_CASE("tail identity special values") {
  CHECK(gamma_identity_lhs(2, 1.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(gamma_identity_lhs(1, 1.0) == doctest::Approx(std::numbers::pi).epsilon(1e-10));
  CHECK(gamma_identity_lhs(3, 1.0) ==
        doctest::Approx(0.5 * std::numbers::pi).epsilon(1e-10));
  // a-scaling: a^{-p/2}
  CHECK(gamma_identity_rhs(2, 4.0).value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("iterated tail identity") {
  {
    const auto r = iterated_tail_identity(2, 1, 1.0);
    CHECK(r.closed_form == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(r.numeric - r.closed_form) < 1e-9);
  }
  {
    const auto r = iterated_tail_identity(3, 2, 1.0);
    CHECK(r.closed_form == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK(std::abs(r.numeric - r.closed_form) < 1e-8);
  }
  {
    // homogeneity: rho = 2 scales the closed form by 2^{-(p'+1)}
    const auto one = iterated_tail_identity(3, 1, 1.0);
    const auto two = iterated_tail_identity(3, 1, 2.0);
    CHECK(two.closed_form ==
          doctest::Approx(one.closed_form * std::pow(2.0, -3.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(iterated_tail_identity(2, 2, 1.0), Error);  // p - k < 1
  CHECK_THROWS_AS(iterated_tail_identity(5, 4, 1.0), Error);  // k > 3
}
