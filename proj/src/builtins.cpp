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

#include "linkint/builtins.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace linkint {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

ClosedCurve circle_curve(const Vec& center, double radius, int axis_i, int axis_j) {
  const int d = center.dim();
  if (axis_i < 0 || axis_j < 0 || axis_i >= d || axis_j >= d || axis_i == axis_j)
    throw Error("circle_curve: bad axes");
  auto pos = [=](double t) {
    Vec p = center;
    p[axis_i] += radius * std::cos(kTau * t);
    p[axis_j] += radius * std::sin(kTau * t);
    return p;
  };
  auto vel = [=](double t) {
    Vec v(d);
    v[axis_i] = -radius * kTau * std::sin(kTau * t);
    v[axis_j] = radius * kTau * std::cos(kTau * t);
    return v;
  };
  return ClosedCurve::analytic(d, pos, vel, "circle");
}

ClosedCurve torus_cable_curve(int wraps, double rho, double major_radius) {
  const double R = major_radius;
  const int k = wraps;
  auto pos = [=](double t) {
    const double a = R + rho * std::cos(kTau * k * t);
    return Vec{a * std::cos(kTau * t), a * std::sin(kTau * t),
               rho * std::sin(kTau * k * t)};
  };
  auto vel = [=](double t) {
    const double a = R + rho * std::cos(kTau * k * t);
    const double da = -rho * kTau * k * std::sin(kTau * k * t);
    return Vec{da * std::cos(kTau * t) - a * kTau * std::sin(kTau * t),
               da * std::sin(kTau * t) + a * kTau * std::cos(kTau * t),
               rho * kTau * k * std::cos(kTau * k * t)};
  };
  return ClosedCurve::analytic(3, pos, vel, "torus_cable");
}

ClosedCurve torus_knot_curve(int p, int q, double major_radius, double minor_radius) {
  const double R = major_radius, r = minor_radius;
  auto pos = [=](double t) {
    const double a = R + r * std::cos(kTau * q * t);
    return Vec{a * std::cos(kTau * p * t), a * std::sin(kTau * p * t),
               r * std::sin(kTau * q * t)};
  };
  auto vel = [=](double t) {
    const double a = R + r * std::cos(kTau * q * t);
    const double da = -r * kTau * q * std::sin(kTau * q * t);
    return Vec{da * std::cos(kTau * p * t) - a * kTau * p * std::sin(kTau * p * t),
               da * std::sin(kTau * p * t) + a * kTau * p * std::cos(kTau * p * t),
               r * kTau * q * std::cos(kTau * q * t)};
  };
  return ClosedCurve::analytic(3, pos, vel, "torus_knot");
}

PatchManifold sphere_patch(const Vec& center, double radius) {
  const int d = center.dim();
  if (d < 3) throw Error("sphere_patch: ambient dimension must be >= 3");
  PatchManifold p;
  p.intrinsic_dim = 2;
  p.ambient_dim = d;
  p.periodic = {false, true};  // u = latitude (poles), v = longitude
  p.pole_degenerate = true;
  p.pos = [=](double u, double v) {
    Vec out = center;
    const double su = std::sin(std::numbers::pi * u);
    out[0] += radius * su * std::cos(kTau * v);
    out[1] += radius * std::cos(std::numbers::pi * u);
    out[2] += radius * su * std::sin(kTau * v);
    return out;
  };
  p.jac = [=](double u, double v) {
    const double su = std::sin(std::numbers::pi * u);
    const double cu = std::cos(std::numbers::pi * u);
    Vec du(d), dv(d);
    du[0] = radius * std::numbers::pi * cu * std::cos(kTau * v);
    du[1] = -radius * std::numbers::pi * su;
    du[2] = radius * std::numbers::pi * cu * std::sin(kTau * v);
    dv[0] = -radius * kTau * su * std::sin(kTau * v);
    dv[1] = 0.0;
    dv[2] = radius * kTau * su * std::cos(kTau * v);
    return std::array<Vec, 2>{du, dv};
  };
  p.source = "sphere2";
  return p;
}

PatchManifold torus_r4_patch(double major_radius, double minor_radius) {
  const double R = major_radius, r = minor_radius;
  PatchManifold p;
  p.intrinsic_dim = 2;
  p.ambient_dim = 4;
  p.periodic = {true, true};
  p.pos = [=](double u, double v) {
    const double a = R + r * std::cos(kTau * v);
    return Vec{a * std::cos(kTau * u), a * std::sin(kTau * u), 0.0,
               r * std::sin(kTau * v)};
  };
  p.jac = [=](double u, double v) {
    const double a = R + r * std::cos(kTau * v);
    const double da = -r * kTau * std::sin(kTau * v);
    Vec du{-a * kTau * std::sin(kTau * u), a * kTau * std::cos(kTau * u), 0.0, 0.0};
    Vec dv{da * std::cos(kTau * u), da * std::sin(kTau * u), 0.0,
           r * kTau * std::cos(kTau * v)};
    return std::array<Vec, 2>{du, dv};
  };
  p.source = "torus_r4";
  return p;
}

const std::vector<std::string>& builtin_scene_names() {
  static const std::vector<std::string> names = {
      "unlink_r3", "hopf_r3", "torus_link_r3", "spun_pair_r4", "separated_pair_r4"};
  return names;
}

Scene builtin_scene(const std::string& name, const std::vector<double>& params) {
  Scene s;
  s.name = name;
  if (name == "unlink_r3") {
    // Circles in parallel planes, separated by {x3 = 1.5}.
    s.ambient_dim = 3;
    s.objects.push_back({"g1", circle_curve(Vec{0, 0, 0}, 1.0, 0, 1)});
    s.objects.push_back({"g2", circle_curve(Vec{0, 0, 3}, 1.0, 0, 1)});
    s.expected.push_back({"g1", "g2", 0.0, "separating-hyperplane null-homotopy"});
  } else if (name == "hopf_r3") {
    s.ambient_dim = 3;
    s.objects.push_back({"g1", circle_curve(Vec{0, 0, 0}, 1.0, 0, 1)});
    s.objects.push_back({"g2", circle_curve(Vec{1, 0, 0}, 1.0, 0, 2)});
    s.expected.push_back({"g1", "g2", 1.0, "crossing-sign oracle on 256-gons"});
  } else if (name == "torus_link_r3") {
    int a = 2, b = 4;
    if (!params.empty()) {
      if (params.size() != 2) throw UnknownFamily("torus_link_r3 expects params {a, b}");
      a = static_cast<int>(params[0]);
      b = static_cast<int>(params[1]);
    }
    if (a < 1 || b < 1 || b % a != 0)
      throw UnknownFamily("torus_link_r3: need a >= 1 and a | b for the two-component cable form");
    const int wraps = b / a;
    s.ambient_dim = 3;
    s.objects.push_back({"g1", circle_curve(Vec{0, 0, 0}, 1.0, 0, 1)});
    s.objects.push_back({"g2", torus_cable_curve(wraps, 0.35)});
    s.expected.push_back({"g1", "g2", static_cast<double>(wraps),
                          "crossing-sign oracle on 256-gons"});
  } else if (name == "spun_pair_r4") {
    s.ambient_dim = 4;
    s.objects.push_back({"m", circle_curve(Vec{1, 0, 0, 0}, 1.0, 0, 3)});
    s.objects.push_back({"n", sphere_patch(Vec{0, 0, 0, 0}, 1.0)});
    s.expected.push_back({"m", "n", 1.0, "hyperplane reduction to a Hopf pair"});
  } else if (name == "separated_pair_r4") {
    s.ambient_dim = 4;
    s.objects.push_back({"m", circle_curve(Vec{5, 0, 0, 0}, 1.0, 0, 3)});
    s.objects.push_back({"n", sphere_patch(Vec{0, 0, 0, 0}, 1.0)});
    s.expected.push_back({"m", "n", 0.0, "separated by {x1 = 3}"});
  } else {
    throw UnknownFamily("unknown builtin scene '" + name + "'");
  }
  return s;
}

}  // namespace linkint
