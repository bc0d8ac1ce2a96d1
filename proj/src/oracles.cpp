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

#include "linkint/oracles.hpp"

#include <cmath>
#include <numbers>

#include "linkint/invariants.hpp"
#include "linkint/quadrature.hpp"

namespace linkint {
namespace oracles {

namespace {

double point_segment_distance2(double px, double py, double ax, double ay,
                               double bx, double by) {
  const double abx = bx - ax, aby = by - ay;
  const double apx = px - ax, apy = py - ay;
  const double len2 = abx * abx + aby * aby;
  double t = len2 > 0 ? (apx * abx + apy * aby) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = apx - t * abx, dy = apy - t * aby;
  return dx * dx + dy * dy;
}

void validate_polyline(const Polyline& p, int dim, const char* who) {
  if (p.size() < 3) throw Error(std::string(who) + ": polyline needs >= 3 vertices");
  if (p.dim() != dim)
    throw DimensionMismatch(std::string(who) + ": wrong ambient dimension");
  for (size_t i = 0; i < p.size(); ++i) {
    const Vec& a = p.vertices[i];
    const Vec& b = p.vertices[(i + 1) % p.size()];
    if (distance(a, b) <= 1e-12)
      throw Error(std::string(who) + ": consecutive vertices coincide");
  }
}

}  // namespace

int raycast_winding(const Polyline& p, const Point& q) {
  validate_polyline(p, 2, "raycast_winding");
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec& a = p.vertices[i];
    const Vec& b = p.vertices[(i + 1) % n];
    if (point_segment_distance2(q[0], q[1], a[0], a[1], b[0], b[1]) < 1e-18)
      throw PointOnBoundary("raycast_winding: query point within 1e-9 of the polyline");
  }
  int count = 0;
  for (size_t i = 0; i < n; ++i) {
    const Vec& a = p.vertices[i];
    const Vec& b = p.vertices[(i + 1) % n];
    const bool up = a[1] <= q[1] && q[1] < b[1];
    const bool down = b[1] <= q[1] && q[1] < a[1];
    if (!up && !down) continue;
    const double xs = a[0] + (q[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
    if (xs > q[0]) count += up ? 1 : -1;
  }
  return count;
}

int crossing_sign_linking(const Polyline& p1, const Polyline& p2, const Vec& dir) {
  validate_polyline(p1, 3, "crossing_sign_linking");
  validate_polyline(p2, 3, "crossing_sign_linking");
  const double dn = norm(dir);
  if (dir.dim() != 3 || dn < 1e-12)
    throw Error("crossing_sign_linking: bad projection direction");

  // Right-handed frame (e1, e2, w). Viewed against w, "over" means larger
  // depth along w.
  const Vec w = (1.0 / dn) * dir;
  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(w[i]) < std::abs(w[least])) least = i;
  Vec axis{0, 0, 0};
  axis[least] = 1.0;
  Vec e1 = cross3(w, axis);
  e1 = (1.0 / norm(e1)) * e1;
  const Vec e2 = cross3(w, e1);

  struct P2 {
    double u, v, depth;
  };
  auto project = [&](const Polyline& p) {
    std::vector<P2> out;
    out.reserve(p.size());
    for (const auto& x : p.vertices) out.push_back({dot(x, e1), dot(x, e2), dot(x, w)});
    return out;
  };
  const auto a = project(p1);
  const auto b = project(p2);

  constexpr double kEps = 1e-9;
  long long total = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const P2& a1 = a[i];
    const P2& a2 = a[(i + 1) % a.size()];
    const double Au = a2.u - a1.u, Av = a2.v - a1.v;
    const double alen = std::hypot(Au, Av);
    for (size_t j = 0; j < b.size(); ++j) {
      const P2& b1 = b[j];
      const P2& b2 = b[(j + 1) % b.size()];
      const double Bu = b2.u - b1.u, Bv = b2.v - b1.v;
      const double blen = std::hypot(Bu, Bv);
      const double denom = Au * Bv - Av * Bu;
      if (std::abs(denom) < kEps * alen * blen)
        throw NonGenericProjection(
            "crossing_sign_linking: projected segments parallel within 1e-9");
      const double du = b1.u - a1.u, dv = b1.v - a1.v;
      const double s = (du * Bv - dv * Bu) / denom;
      const double t = (du * Av - dv * Au) / denom;
      if (s < -kEps || s > 1 + kEps || t < -kEps || t > 1 + kEps) continue;
      if (s < kEps || s > 1 - kEps || t < kEps || t > 1 - kEps)
        throw NonGenericProjection(
            "crossing_sign_linking: projected vertex within 1e-9 of a segment");
      const double depth1 = a1.depth + s * (a2.depth - a1.depth);
      const double depth2 = b1.depth + t * (b2.depth - b1.depth);
      if (std::abs(depth1 - depth2) < kEps)
        throw NonGenericProjection("crossing_sign_linking: depth tie at a crossing");
      // epsilon = sign of det(under direction, over direction); this matches
      // the engine's Gauss-integral sign convention.
      const bool first_over = depth1 > depth2;
      const double det_uo = first_over ? (Bu * Av - Bv * Au) : (Au * Bv - Av * Bu);
      total += det_uo > 0 ? 1 : -1;
    }
  }
  if (total % 2 != 0)
    throw NonGenericProjection("crossing_sign_linking: odd crossing sum, projection degenerate");
  return static_cast<int>(total / 2);
}

int crossing_sign_linking_auto(const Polyline& p1, const Polyline& p2,
                               std::mt19937_64& rng, int max_tries) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0;; ++attempt) {
    Vec dir{gauss(rng), gauss(rng), gauss(rng)};
    if (norm(dir) < 1e-3) continue;
    try {
      return crossing_sign_linking(p1, p2, dir);
    } catch (const NonGenericProjection&) {
      if (attempt + 1 >= max_tries) throw;
    }
  }
}

double gamma_identity_lhs(int p, double a) {
  if (p < 1) throw Error("gamma_identity_lhs: p must be >= 1");
  if (a <= 0) throw Error("gamma_identity_lhs: a must be positive");
  const double expo = 0.5 * (p + 1);
  return integral_even_decay(
      [a, expo](double z) { return std::pow(a + z * z, -expo); },
      static_cast<double>(p + 1), 1e-12);
}

GammaRhs gamma_identity_rhs(int p, double a) {
  if (p < 1) throw Error("gamma_identity_rhs: p must be >= 1");
  if (a <= 0) throw Error("gamma_identity_rhs: a must be positive");
  const double scale = std::pow(a, -0.5 * p);
  GammaRhs r;
  r.value = scale * std::sqrt(std::numbers::pi) *
            std::exp(std::lgamma(0.5 * p) - std::lgamma(0.5 * (p + 1)));
  r.sphere_volume_form = scale * sphere_volume(p) / sphere_volume(p - 1);
  if (std::abs(r.value - r.sphere_volume_form) > 1e-12 * std::abs(r.value))
    throw Error("gamma_identity_rhs: closed forms disagree beyond 1e-12");
  return r;
}

namespace {

// F(a, j) = integral over R^j of (a + sum t_i^2)^{-(p+1)/2}. Inner levels use
// a fixed Gauss-Legendre size; only the outermost level is refined.
double tail_recursive(double a, int levels, double expo, int inner_nodes) {
  if (levels == 0) return std::pow(a, -expo);
  return detail::integral_even_decay_fixed(
      [&](double z) { return tail_recursive(a + z * z, levels - 1, expo, inner_nodes); },
      inner_nodes);
}

}  // namespace

IteratedTail iterated_tail_identity(int p, int k, double rho) {
  if (k < 1 || k > 3) throw Error("iterated_tail_identity: k must be in [1, 3]");
  if (p - k < 1) throw Error("iterated_tail_identity: need p - k >= 1");
  if (rho <= 0) throw Error("iterated_tail_identity: rho must be positive");

  const double expo = 0.5 * (p + 1);
  const int inner = (k == 3) ? 128 : 256;
  auto eval = [&](int n) {
    return detail::integral_even_decay_fixed(
        [&](double z) {
          return tail_recursive(rho * rho + z * z, k - 1, expo, inner);
        },
        n);
  };
  const auto run = detail::refine_doubling(eval, 1e-11, 64, 1024);

  IteratedTail out;
  out.numeric = run.value;
  out.closed_form =
      sphere_volume(p) / sphere_volume(p - k) / std::pow(rho, p - k + 1);
  return out;
}

}  // namespace oracles
}  // namespace linkint
