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

#include "linkint/invariants.hpp"

#include <cmath>
#include <numbers>

#include "linkint/kernels.hpp"

namespace linkint {

namespace {

// One quadrature rule per dimension: periodic trapezoid or Gauss-Legendre.
struct DimRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

DimRule dim_rule(int n, bool periodic) {
  DimRule r;
  if (periodic) {
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      r.nodes[i] = static_cast<double>(i) / n;
      r.weights[i] = 1.0 / n;
    }
  } else {
    const auto& gl = gauss_legendre(n);
    r.nodes = gl.nodes;
    r.weights = gl.weights;
  }
  return r;
}

// Curve samples with the trapezoid weight folded into the tangent column.
kernels::CurveSamples3 sample_curve3(const ClosedCurve& c, int n) {
  kernels::CurveSamples3 s;
  s.resize(n);
  const double w = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    const Vec p = c.eval(t);
    const Vec d = c.deriv(t);
    s.x[i] = p[0];
    s.y[i] = p[1];
    s.z[i] = p[2];
    s.tx[i] = w * d[0];
    s.ty[i] = w * d[1];
    s.tz[i] = w * d[2];
  }
  return s;
}

kernels::CurveSamples3 sample_patch_curve3(const PatchManifold& m, int n) {
  kernels::CurveSamples3 s;
  s.resize(n);
  const double w = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    const Vec p = m.eval(t);
    const Vec d = m.jacobian(t)[0];
    s.x[i] = p[0];
    s.y[i] = p[1];
    s.z[i] = p[2];
    s.tx[i] = w * d[0];
    s.ty[i] = w * d[1];
    s.tz[i] = w * d[2];
  }
  return s;
}

kernels::CurveSamples4 sample_patch_curve4(const PatchManifold& m, int n) {
  kernels::CurveSamples4 s;
  s.resize(n);
  const DimRule rule = dim_rule(n, m.periodic[0]);
  for (int i = 0; i < n; ++i) {
    const Vec p = m.eval(rule.nodes[i]);
    const Vec d = m.jacobian(rule.nodes[i])[0];
    s.x[i] = p[0];
    s.y[i] = p[1];
    s.z[i] = p[2];
    s.w[i] = p[3];
    const double w = rule.weights[i];
    s.tx[i] = w * d[0];
    s.ty[i] = w * d[1];
    s.tz[i] = w * d[2];
    s.tw[i] = w * d[3];
  }
  return s;
}

kernels::GridSamples4 sample_patch_grid4(const PatchManifold& m, int n) {
  kernels::GridSamples4 s;
  s.resize(static_cast<size_t>(n) * n);
  const DimRule ru = dim_rule(n, m.periodic[0]);
  const DimRule rv = dim_rule(n, m.periodic[1]);
  size_t j = 0;
  for (int iu = 0; iu < n; ++iu) {
    for (int iv = 0; iv < n; ++iv, ++j) {
      const double u = ru.nodes[iu], v = rv.nodes[iv];
      const Vec p = m.eval(u, v);
      const auto jac = m.jacobian(u, v);
      const double w = ru.weights[iu] * rv.weights[iv];
      s.x[j] = p[0];
      s.y[j] = p[1];
      s.z[j] = p[2];
      s.w[j] = p[3];
      s.ux[j] = w * jac[0][0];
      s.uy[j] = w * jac[0][1];
      s.uz[j] = w * jac[0][2];
      s.uw[j] = w * jac[0][3];
      s.vx[j] = jac[1][0];
      s.vy[j] = jac[1][1];
      s.vz[j] = jac[1][2];
      s.vw[j] = jac[1][3];
    }
  }
  return s;
}

std::vector<Vec> patch_point_cloud(const PatchManifold& m, int n) {
  std::vector<Vec> pts;
  if (m.intrinsic_dim == 1) {
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(m.eval(static_cast<double>(i) / n));
  } else {
    const int g = std::max(16, n / 4);
    pts.reserve(static_cast<size_t>(g) * g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        pts.push_back(m.eval((i + 0.5) / g, static_cast<double>(j) / g));
  }
  return pts;
}

void require_disjoint(const std::vector<Vec>& a, const std::vector<Vec>& b,
                      const char* what) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a)
    for (const auto& q : b) best = std::min(best, distance(p, q));
  if (best <= kDisjointnessThreshold)
    throw DisjointnessViolation(std::string(what) +
                                ": images closer than 1e-6 (sampled distance " +
                                std::to_string(best) + ")");
}

LinkingResult refine_linking(const std::function<double(int)>& eval,
                             const std::function<long long(int)>& eval_count,
                             int dims, double tol, int start_nodes, int max_nodes) {
  if (tol <= 0) throw Error("linking integral: tol must be positive");
  if (start_nodes < 8) throw Error("linking integral: start_nodes must be >= 8");
  if (max_nodes > 4096) throw Error("linking integral: max_nodes capped at 4096 per dim");
  QuadratureResult q;
  double prev = 0.0;
  bool have_prev = false;
  for (int n = start_nodes; n <= max_nodes; n *= 2) {
    const double value = eval(n);
    q.evaluations += eval_count(n);
    q.value = value;
    q.nodes_per_dim.assign(dims, n);
    if (have_prev) {
      q.error_estimate = std::abs(value - prev);
      ++q.refinements;
      if (q.error_estimate < tol) return make_linking_result(value, q);
    }
    prev = value;
    have_prev = true;
  }
  throw ToleranceNotReached(
      "linking integral: |delta| = " + std::to_string(q.error_estimate) +
          " above tol " + std::to_string(tol) + " at max nodes; raise max_nodes",
      q);
}

}  // namespace

LinkingResult make_linking_result(double raw, QuadratureResult q) {
  LinkingResult r;
  r.raw = raw;
  r.rounded = std::llround(raw);
  r.residual = std::abs(raw - static_cast<double>(r.rounded));
  r.quadrature = std::move(q);
  return r;
}

double sphere_volume(int p) {
  if (p < 0 || p > 20) throw Error("sphere_volume: p must be in [0, 20]");
  return 2.0 * std::exp(0.5 * (p + 1) * std::log(std::numbers::pi) -
                        std::lgamma(0.5 * (p + 1)));
}

double gauss_linking_r3_pass(const ClosedCurve& c1, const ClosedCurve& c2,
                             int nodes) {
  return kernels::pair_sum3(sample_curve3(c1, nodes), sample_curve3(c2, nodes)) /
         sphere_volume(2);
}

double degree_linking_pass(const PatchManifold& M, const PatchManifold& N,
                           int nodes) {
  const int m = M.intrinsic_dim, n = N.intrinsic_dim;
  const double norm = 1.0 / sphere_volume(m + n);
  if (m == 1 && n == 1)
    return norm * kernels::pair_sum3(sample_patch_curve3(M, nodes),
                                     sample_patch_curve3(N, nodes));
  if (m == 1 && n == 2)
    return norm * kernels::pair_sum4(sample_patch_curve4(M, nodes),
                                     sample_patch_grid4(N, nodes));
  if (m == 2 && n == 1) {
    // The kernel fixes the curve side; restoring the (r, M-partials,
    // N-partials) column order costs one sign:
    // det(y-x, x_u, x_v, y_t) = -det(x-y, y_t, x_u, x_v).
    return -norm * kernels::pair_sum4(sample_patch_curve4(N, nodes),
                                      sample_patch_grid4(M, nodes));
  }
  throw DimensionMismatch("degree_linking: only (m,n) in {(1,1),(1,2),(2,1)} supported");
}

double winding_number_pass(const ClosedCurve& c, const Point& p, int nodes) {
  kernels::PlanarSamples s;
  s.resize(nodes);
  const double w = 1.0 / nodes;
  for (int i = 0; i < nodes; ++i) {
    const double t = static_cast<double>(i) / nodes;
    const Vec pt = c.eval(t);
    const Vec dv = c.deriv(t);
    s.x[i] = pt[0];
    s.y[i] = pt[1];
    s.tx[i] = w * dv[0];
    s.ty[i] = w * dv[1];
  }
  return kernels::winding_sum2(s, p[0], p[1]) / (2.0 * std::numbers::pi);
}

LinkingResult gauss_linking_r3(const ClosedCurve& c1, const ClosedCurve& c2,
                               double tol, int start_nodes, int max_nodes) {
  if (c1.dim() != 3 || c2.dim() != 3)
    throw DimensionMismatch("gauss_linking_r3: curves must live in R^3");
  {
    const auto a = sample_curve3(c1, 256);
    const auto b = sample_curve3(c2, 256);
    if (kernels::min_distance3(a, b) <= kDisjointnessThreshold)
      throw DisjointnessViolation("gauss_linking_r3: curves closer than 1e-6");
  }
  auto eval = [&](int n) { return gauss_linking_r3_pass(c1, c2, n); };
  auto count = [](int n) { return static_cast<long long>(n) * n; };
  return refine_linking(eval, count, 2, tol, start_nodes, max_nodes);
}

LinkingResult degree_linking(const PatchManifold& M, const PatchManifold& N,
                             double tol, int start_nodes, int max_nodes) {
  const int m = M.intrinsic_dim, n = N.intrinsic_dim;
  const int d = M.ambient_dim;
  if (N.ambient_dim != d)
    throw DimensionMismatch("degree_linking: ambient dimensions differ");
  if (m + n + 1 != d)
    throw DimensionMismatch("degree_linking: need ambient dim = m + n + 1");
  if (!((m == 1 && n == 1) || (m == 1 && n == 2) || (m == 2 && n == 1)))
    throw DimensionMismatch("degree_linking: only (m,n) in {(1,1),(1,2),(2,1)} supported");

  require_disjoint(patch_point_cloud(M, 256), patch_point_cloud(N, 256),
                   "degree_linking");

  auto eval = [&](int k) { return degree_linking_pass(M, N, k); };
  const int dims = 1 + std::max(m, n);
  auto count = [&](int k) {
    long long c = static_cast<long long>(k) * k;
    if (m + n == 3) c *= k;
    return c;
  };
  return refine_linking(eval, count, dims, tol, start_nodes, max_nodes);
}

LinkingResult winding_number(const ClosedCurve& c, const Point& p, double tol,
                             int start_nodes, int max_nodes) {
  if (c.dim() != 2 || p.dim() != 2)
    throw DimensionMismatch("winding_number: planar inputs required");
  for (int i = 0; i < 512; ++i) {
    if (distance(c.eval(static_cast<double>(i) / 512), p) <= kDisjointnessThreshold)
      throw PointOnCurve("winding_number: point within 1e-6 of the curve");
  }
  auto eval = [&](int n) { return winding_number_pass(c, p, n); };
  auto count = [](int n) { return static_cast<long long>(n); };
  return refine_linking(eval, count, 1, tol, start_nodes, max_nodes);
}

}  // namespace linkint
