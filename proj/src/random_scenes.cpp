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

#include "linkint/random_scenes.hpp"

#include <cmath>
#include <numbers>

#include "linkint/reduction.hpp"

namespace linkint {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;
constexpr int kOrder = 3;

// Trig polynomial per coordinate: sum_k ca[d][k] cos(k tau t) + sa[d][k] sin(...).
struct Fourier3 {
  std::array<std::array<double, kOrder + 1>, 3> ca{};
  std::array<std::array<double, kOrder + 1>, 3> sa{};

  Vec eval(double t) const {
    Vec p(3);
    for (int d = 0; d < 3; ++d) {
      double s = ca[d][0];
      for (int k = 1; k <= kOrder; ++k)
        s += ca[d][k] * std::cos(kTau * k * t) + sa[d][k] * std::sin(kTau * k * t);
      p[d] = s;
    }
    return p;
  }
  Vec deriv(double t) const {
    Vec v(3);
    for (int d = 0; d < 3; ++d) {
      double s = 0;
      for (int k = 1; k <= kOrder; ++k)
        s += kTau * k *
             (-ca[d][k] * std::sin(kTau * k * t) + sa[d][k] * std::cos(kTau * k * t));
      v[d] = s;
    }
    return v;
  }

  ClosedCurve curve(const std::string& src) const {
    Fourier3 self = *this;
    return ClosedCurve::analytic(
        3, [self](double t) { return self.eval(t); },
        [self](double t) { return self.deriv(t); }, src);
  }
};

double min_speed(const Fourier3& f, int samples = 512) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i)
    best = std::min(best, norm(f.deriv(static_cast<double>(i) / samples)));
  return best;
}

double min_distance(const Fourier3& a, const Fourier3& b, int samples = 256) {
  std::vector<Vec> pa, pb;
  pa.reserve(samples);
  pb.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    pa.push_back(a.eval(static_cast<double>(i) / samples));
    pb.push_back(b.eval(static_cast<double>(i) / samples));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pa)
    for (const auto& q : pb) best = std::min(best, distance(p, q));
  return best;
}

}  // namespace

Scene random_planar_scene(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };

  for (int attempt = 0; attempt < 500; ++attempt) {
    // Planar component: perturbed unit circle in {x3 = 0}.
    Fourier3 g1{};
    g1.ca[0][1] = 1.0;
    g1.sa[1][1] = 1.0;
    g1.ca[0][0] = uni(-0.1, 0.1);
    g1.ca[1][0] = uni(-0.1, 0.1);
    for (int d = 0; d < 2; ++d) {
      for (int k = 2; k <= kOrder; ++k) {
        g1.ca[d][k] = uni(-0.12, 0.12);
        g1.sa[d][k] = uni(-0.12, 0.12);
      }
    }

    // Transverse component: one of three base shapes, then perturbed.
    Fourier3 g2{};
    const int shape = static_cast<int>(rng() % 3);
    if (shape == 0) {
      // Hopf-style circle through the planar loop.
      const double r = uni(0.8, 1.25);
      g2.ca[0][0] = uni(0.7, 1.2);
      g2.ca[0][1] = r;
      g2.sa[2][1] = r;
    } else if (shape == 1) {
      // Far circle, separated by a plane.
      const double r = uni(0.8, 1.2);
      g2.ca[0][0] = uni(3.3, 3.9);
      g2.ca[0][1] = r;
      g2.sa[2][1] = r;
    } else {
      // (1,2) cable around the planar loop.
      const double rho = uni(0.3, 0.45);
      g2.ca[0][1] = 1.0 + 0.5 * rho;
      g2.ca[0][3] = 0.5 * rho;
      g2.sa[1][1] = 1.0 - 0.5 * rho;
      g2.sa[1][3] = 0.5 * rho;
      g2.sa[2][2] = rho;
    }
    for (int d = 0; d < 3; ++d) {
      for (int k = 1; k <= kOrder; ++k) {
        g2.ca[d][k] += uni(-0.08, 0.08);
        g2.sa[d][k] += uni(-0.08, 0.08);
      }
    }
    if (rng() % 2 == 0) {
      // Reverse orientation: t -> -t negates every sine coefficient.
      for (int d = 0; d < 3; ++d)
        for (int k = 1; k <= kOrder; ++k) g2.sa[d][k] = -g2.sa[d][k];
    }

    if (min_speed(g1) < 0.25 || min_speed(g2) < 0.25) continue;
    if (min_distance(g1, g2) < 0.08) continue;

    // The reduction path needs clean transverse crossings of {x3 = 0}.
    try {
      const auto pts =
          find_plane_intersections(g2.curve("probe"), Hyperplane::single(2, 0.0));
      bool ok = true;
      for (const auto& p : pts) {
        if (std::abs(g2.deriv(p.parameter)[2]) < 0.2) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    } catch (const NonTransverse&) {
      continue;
    }

    Scene s;
    s.name = "random_planar";
    s.ambient_dim = 3;
    s.objects.push_back({"g1", g1.curve("fourier_planar")});
    s.objects.push_back({"g2", g2.curve("fourier_transverse")});
    return s;
  }
  throw Error("random_planar_scene: rejection sampling failed to converge");
}

}  // namespace linkint
