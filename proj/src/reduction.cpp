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

#include "linkint/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace linkint {

namespace {

bool positive(double x) { return x > 0.0; }

// Bisection for the pinned coordinate of a curve, on the unwrapped parameter
// interval [lo, hi] (the curve wraps internally).
double bisect_curve_coord(const ClosedCurve& c, int k, double v0, double lo,
                          double hi, double flo, long long* evals) {
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double fm = c.eval(mid)[k] - v0;
    if (evals) ++*evals;
    if (std::abs(fm) < 1e-12 || hi - lo < 1e-16) return mid;
    if (positive(fm) == positive(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace

std::vector<IntersectionPoint> find_plane_intersections(const ClosedCurve& c,
                                                        const Hyperplane& h,
                                                        int scan_samples,
                                                        long long* eval_count) {
  if (h.codim() != 1)
    throw Error("find_plane_intersections: hyperplane must pin exactly one coordinate");
  const int k = h.fixed[0].index;
  const double v0 = h.fixed[0].value;
  if (k < 0 || k >= c.dim())
    throw DimensionMismatch("find_plane_intersections: coordinate out of range");

  const int n = scan_samples;
  long long evals = 0;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = c.eval(static_cast<double>(i) / n)[k] - v0;
    ++evals;
  }

  constexpr double kGraze = 1e-9;
  std::vector<double> roots;
  std::vector<bool> consumed(n, false);  // interval i = [t_i, t_{i+1}]

  // Samples sitting on the plane: either a genuine crossing straddled by the
  // neighbors, or grazing contact.
  for (int i = 0; i < n; ++i) {
    if (std::abs(g[i]) >= kGraze) continue;
    const double gp = g[(i + n - 1) % n];
    const double gn = g[(i + 1) % n];
    if (std::abs(gp) < kGraze || std::abs(gn) < kGraze)
      throw NonTransverse("find_plane_intersections: flat contact with the plane near t=" +
                          std::to_string(static_cast<double>(i) / n));
    if (positive(gp) == positive(gn))
      throw NonTransverse("find_plane_intersections: grazing contact (|x_k| < 1e-9 "
                          "without a sign change) near t=" +
                          std::to_string(static_cast<double>(i) / n));
    const double lo = static_cast<double>(i - 1) / n;
    const double hi = static_cast<double>(i + 1) / n;
    roots.push_back(bisect_curve_coord(c, k, v0, lo, hi, gp, &evals));
    consumed[(i + n - 1) % n] = true;
    consumed[i] = true;
  }

  for (int i = 0; i < n; ++i) {
    if (consumed[i]) continue;
    const double a = g[i], b = g[(i + 1) % n];
    if (std::abs(a) < kGraze || std::abs(b) < kGraze) continue;  // handled above
    if (positive(a) == positive(b)) continue;
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    roots.push_back(bisect_curve_coord(c, k, v0, lo, hi, a, &evals));
  }

  std::vector<IntersectionPoint> out;
  for (double t : roots) {
    const double tw = wrap_unit(t);
    const double dk = c.deriv(tw)[k];
    if (std::abs(dk) < 1e-6)
      throw NonTransverse("find_plane_intersections: coordinate derivative below 1e-6 "
                          "at crossing t=" + std::to_string(tw));
    IntersectionPoint p;
    p.location = c.eval(tw);
    p.location[k] = v0;
    p.sign = dk > 0 ? 1 : -1;
    p.parameter = tw;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const IntersectionPoint& a, const IntersectionPoint& b) {
              return a.parameter < b.parameter;
            });
  if (out.size() % 2 != 0)
    throw NonTransverse("find_plane_intersections: odd crossing count, grazing suspected");
  if (eval_count) *eval_count += evals;
  return out;
}

LinkingResult reduced_linking_curves(const ClosedCurve& planar,
                                     const ClosedCurve& transverse, double tol) {
  if (planar.dim() != 3 || transverse.dim() != 3)
    throw DimensionMismatch("reduced_linking_curves: curves must live in R^3");
  for (int i = 0; i < 512; ++i) {
    if (std::abs(planar.eval(static_cast<double>(i) / 512)[2]) > 1e-9)
      throw Error("reduced_linking_curves: planar curve must lie in {x3 = 0}");
  }

  QuadratureResult q;
  auto points = find_plane_intersections(transverse, Hyperplane::single(2, 0.0),
                                         1024, &q.evaluations);

  ClosedCurve flat = ClosedCurve::analytic(
      2,
      [planar](double t) {
        const Vec p = planar.eval(t);
        return Vec{p[0], p[1]};
      },
      [planar](double t) {
        const Vec v = planar.deriv(t);
        return Vec{v[0], v[1]};
      },
      planar.source() + ":projected");

  double raw = 0.0;
  for (const auto& p : points) {
    const LinkingResult w = winding_number(flat, Vec{p.location[0], p.location[1]}, tol);
    // The reduced integrand's relative position points from the planar curve
    // toward the crossing point; flipping it negates the winding integrand.
    raw -= p.sign * w.raw;
    q.evaluations += w.quadrature.evaluations;
    q.refinements += w.quadrature.refinements;
    q.error_estimate += w.quadrature.error_estimate;
    if (q.nodes_per_dim.empty() ||
        w.quadrature.nodes_per_dim[0] > q.nodes_per_dim[0])
      q.nodes_per_dim = w.quadrature.nodes_per_dim;
  }
  return make_linking_result(raw, q);
}

// -- marching squares ------------------------------------------------------

namespace {

struct GridGeom {
  int g = 0;
  bool pu = false, pv = false;
  int nu = 0, nv = 0;  // corner counts

  double ucoord(int i) const { return pu ? (i + 0.5) / g : static_cast<double>(i) / g; }
  double vcoord(int j) const { return pv ? (j + 0.5) / g : static_cast<double>(j) / g; }
  int uwrap(int i) const { return pu ? i % nu : i; }
  int vwrap(int j) const { return pv ? j % nv : j; }
};

struct Crossing {
  double u = 0, v = 0;   // polished parameter-space location (unwrapped)
  double fu = 0, fv = 0; // gradient of the pinned coordinate there
};

// Edge ids: H(i,j) spans corners (i,j)-(i+1,j); V(i,j) spans (i,j)-(i,j+1).
int64_t h_edge_id(const GridGeom& gg, int i, int j) {
  return static_cast<int64_t>(i) * gg.nv + gg.vwrap(j);
}
int64_t v_edge_id(const GridGeom& gg, int i, int j) {
  const int64_t base = static_cast<int64_t>(gg.g) * gg.nv;
  return base + static_cast<int64_t>(gg.uwrap(i)) * gg.g + j;
}

}  // namespace

std::vector<SliceCurve> slice_surface(const PatchManifold& N, const Hyperplane& h,
                                      int grid) {
  if (N.intrinsic_dim != 2)
    throw DimensionMismatch("slice_surface: surface (n = 2) required");
  if (h.codim() != 1)
    throw Error("slice_surface: hyperplane must pin exactly one coordinate");
  const int k = h.fixed[0].index;
  const double v0 = h.fixed[0].value;
  const int d = N.ambient_dim;
  if (k < 0 || k >= d) throw DimensionMismatch("slice_surface: coordinate out of range");
  if (grid < 16) throw Error("slice_surface: grid too coarse");

  GridGeom gg;
  gg.g = grid;
  gg.pu = N.periodic[0];
  gg.pv = N.periodic[1];
  gg.nu = gg.pu ? grid : grid + 1;
  gg.nv = gg.pv ? grid : grid + 1;

  auto f_at = [&](double u, double v) { return N.eval(u, v)[k] - v0; };

  // Corner values. Periodic grids are offset by half a cell so authored
  // scenes whose zero set lands exactly on parameter lines stay off-corner.
  std::vector<double> F(static_cast<size_t>(gg.nu) * gg.nv);
  for (int i = 0; i < gg.nu; ++i)
    for (int j = 0; j < gg.nv; ++j)
      F[static_cast<size_t>(i) * gg.nv + j] = f_at(gg.ucoord(i), gg.vcoord(j));

  auto corner = [&](int i, int j) -> double {
    return F[static_cast<size_t>(gg.uwrap(i)) * gg.nv + gg.vwrap(j)];
  };

  // A crossed edge keeps its endpoint data for the later polish step.
  struct EdgeInfo {
    double ua, va, ub, vb;
    double fa;
    std::vector<int64_t> partners;
  };
  std::map<int64_t, EdgeInfo> edges;

  auto note_edge = [&](int64_t id, double ua, double va, double ub, double vb,
                       double fa) {
    auto it = edges.find(id);
    if (it == edges.end()) edges.emplace(id, EdgeInfo{ua, va, ub, vb, fa, {}});
  };

  auto connect = [&](int64_t a, int64_t b) {
    edges.at(a).partners.push_back(b);
    edges.at(b).partners.push_back(a);
  };

  for (int ci = 0; ci < gg.g; ++ci) {
    for (int cj = 0; cj < gg.g; ++cj) {
      if (!gg.pu && ci + 1 >= gg.nu) continue;
      if (!gg.pv && cj + 1 >= gg.nv) continue;
      const double f00 = corner(ci, cj);
      const double f10 = corner(ci + 1, cj);
      const double f01 = corner(ci, cj + 1);
      const double f11 = corner(ci + 1, cj + 1);

      const bool bottom = positive(f00) != positive(f10);
      const bool right = positive(f10) != positive(f11);
      const bool top = positive(f01) != positive(f11);
      const bool left = positive(f00) != positive(f01);
      const int count = bottom + right + top + left;
      if (count == 0) continue;

      const double u0 = gg.ucoord(ci), u1 = gg.ucoord(ci + 1);
      const double w0 = gg.vcoord(cj), w1 = gg.vcoord(cj + 1);
      const int64_t eb = h_edge_id(gg, ci, cj);
      const int64_t et = h_edge_id(gg, ci, cj + 1);
      const int64_t el = v_edge_id(gg, ci, cj);
      const int64_t er = v_edge_id(gg, ci + 1, cj);
      if (bottom) note_edge(eb, u0, w0, u1, w0, f00);
      if (top) note_edge(et, u0, w1, u1, w1, f01);
      if (left) note_edge(el, u0, w0, u0, w1, f00);
      if (right) note_edge(er, u1, w0, u1, w1, f10);

      if (count == 2) {
        int64_t pair[2];
        int idx = 0;
        if (bottom) pair[idx++] = eb;
        if (right) pair[idx++] = er;
        if (top) pair[idx++] = et;
        if (left) pair[idx++] = el;
        connect(pair[0], pair[1]);
      } else if (count == 4) {
        // Saddle cell: the center value decides which diagonal the contour
        // separates (midpoint rule).
        const double fc = f_at(0.5 * (u0 + u1), 0.5 * (w0 + w1));
        if (positive(fc) == positive(f00)) {
          connect(eb, er);
          connect(et, el);
        } else {
          connect(eb, el);
          connect(et, er);
        }
      } else {
        throw NonTransverse("slice_surface: degenerate cell with " +
                            std::to_string(count) + " crossings");
      }
    }
  }

  for (auto& [id, info] : edges) {
    std::sort(info.partners.begin(), info.partners.end());
    if (info.partners.size() > 2)
      throw NonTransverse("slice_surface: edge shared by more than two segments");
  }

  // Chain crossed edges into loops; a degree-1 edge means the contour ran
  // into a non-periodic chart boundary.
  std::set<int64_t> visited;
  std::vector<std::vector<int64_t>> loops;
  for (const auto& [start, info] : edges) {
    if (visited.count(start)) continue;
    if (info.partners.size() < 2)
      throw OpenContour("slice_surface: contour ends on a chart boundary");
    std::vector<int64_t> loop{start};
    visited.insert(start);
    int64_t prev = start;
    int64_t cur = info.partners[0];
    while (cur != start) {
      visited.insert(cur);
      loop.push_back(cur);
      const auto& p = edges.at(cur).partners;
      if (p.size() < 2)
        throw OpenContour("slice_surface: contour ends on a chart boundary");
      const int64_t next = (p[0] == prev) ? p[1] : p[0];
      prev = cur;
      cur = next;
    }
    loops.push_back(std::move(loop));
  }

  const int parity = ((d - 1 - k) % 2 == 0) ? 1 : -1;

  std::vector<SliceCurve> out;
  std::vector<std::pair<double, double>> first_points;
  for (const auto& loop : loops) {
    if (loop.size() < 4) continue;  // sub-cell speck, below slice resolution

    // Polish every crossing onto the plane along its grid edge.
    std::vector<Crossing> pts;
    pts.reserve(loop.size());
    for (int64_t id : loop) {
      const EdgeInfo& e = edges.at(id);
      double lo = 0.0, hi = 1.0, flo = e.fa;
      double s = 0.5;
      for (int iter = 0; iter < 200; ++iter) {
        s = 0.5 * (lo + hi);
        const double u = e.ua + s * (e.ub - e.ua);
        const double v = e.va + s * (e.vb - e.va);
        const double fm = f_at(u, v);
        if (std::abs(fm) < 1e-12 || hi - lo < 3e-16) break;
        if (positive(fm) == positive(flo)) {
          lo = s;
          flo = fm;
        } else {
          hi = s;
        }
      }
      Crossing c;
      c.u = e.ua + s * (e.ub - e.ua);
      c.v = e.va + s * (e.vb - e.va);
      const auto jac = N.jacobian(c.u, c.v);  // eval wraps periodic coords
      c.fu = jac[0][k];
      c.fv = jac[1][k];
      if (std::hypot(c.fu, c.fv) < 1e-6)
        throw NonTransverse("slice_surface: transverse gradient below 1e-6 on the zero set");
      pts.push_back(c);
    }

    // Canonical start and direction so the output ordering is reproducible.
    const auto key = [&](const Crossing& c) {
      return std::make_pair(wrap_unit(c.u), wrap_unit(c.v));
    };
    size_t best = 0;
    for (size_t i = 1; i < pts.size(); ++i)
      if (key(pts[i]) < key(pts[best])) best = i;
    std::rotate(pts.begin(), pts.begin() + best, pts.end());
    if (key(pts[pts.size() - 1]) < key(pts[1])) {
      std::reverse(pts.begin() + 1, pts.end());
    }

    // Orientation weight from (contour tangent, transverse gradient) in the
    // chart, times the row permutation parity of pinning coordinate k.
    double du = pts[1].u - pts[0].u;
    double dv = pts[1].v - pts[0].v;
    if (gg.pu) du -= std::round(du);
    if (gg.pv) dv -= std::round(dv);
    const double orient = du * pts[0].fv - dv * pts[0].fu;
    if (std::abs(orient) < 1e-14)
      throw NonTransverse("slice_surface: cannot orient component (tangent parallel to gradient)");
    const int sigma = orient > 0 ? 1 : -1;

    // Map to the hyperplane and resample uniformly by chord length.
    std::vector<Vec> ambient;
    ambient.reserve(pts.size());
    for (const auto& c : pts) {
      Vec p = N.eval(c.u, c.v);  // eval wraps periodic coords
      p[k] = v0;
      ambient.push_back(p);
    }
    size_t target = 64;
    while (target < ambient.size() && target < 1024) target *= 2;

    std::vector<double> cum(ambient.size() + 1, 0.0);
    for (size_t i = 0; i < ambient.size(); ++i)
      cum[i + 1] = cum[i] + distance(ambient[i], ambient[(i + 1) % ambient.size()]);
    const double total = cum.back();
    if (total <= 0) continue;

    std::vector<Vec> resampled;
    resampled.reserve(target);
    size_t seg = 0;
    for (size_t mcount = 0; mcount < target; ++mcount) {
      const double want = total * mcount / target;
      while (seg + 1 < cum.size() - 1 && cum[seg + 1] <= want) ++seg;
      const double span = cum[seg + 1] - cum[seg];
      const double frac = span > 0 ? (want - cum[seg]) / span : 0.0;
      const Vec& a = ambient[seg];
      const Vec& b = ambient[(seg + 1) % ambient.size()];
      resampled.push_back(a + frac * (b - a));
    }

    SliceCurve sc;
    sc.curve = ClosedCurve::from_samples(resampled);
    sc.sign = sigma * parity;
    out.push_back(std::move(sc));
    first_points.push_back(key(pts[0]));
  }

  // Deterministic component order: by first parameter-space point.
  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return first_points[a] < first_points[b]; });
  std::vector<SliceCurve> sorted;
  sorted.reserve(out.size());
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

LinkingResult reduced_linking_general(const PatchManifold& M,
                                      const std::vector<SliceCurve>& slices,
                                      const Hyperplane& h, double tol) {
  if (h.codim() != 1)
    throw Error("reduced_linking_general: hyperplane must pin exactly one coordinate");
  const int k = h.fixed[0].index;
  const double v0 = h.fixed[0].value;
  const int d = M.ambient_dim;
  if (M.intrinsic_dim != 1)
    throw DimensionMismatch("reduced_linking_general: M must be one-dimensional");
  for (int i = 0; i < 512; ++i) {
    if (std::abs(M.eval(static_cast<double>(i) / 512)[k] - v0) > 1e-9)
      throw DimensionMismatch("reduced_linking_general: M must lie in the hyperplane");
  }

  auto drop = [k](const Vec& p) {
    Vec out(p.dim() - 1);
    int j = 0;
    for (int i = 0; i < p.dim(); ++i)
      if (i != k) out[j++] = p[i];
    return out;
  };

  PatchManifold mh;
  mh.intrinsic_dim = 1;
  mh.ambient_dim = d - 1;
  mh.periodic = M.periodic;
  mh.pos = [M, drop](double u, double) { return drop(M.eval(u)); };
  mh.jac = [M, drop, d](double u, double) {
    return std::array<Vec, 2>{drop(M.jacobian(u)[0]), Vec(d - 1)};
  };
  mh.source = M.source + ":in-plane";

  QuadratureResult q;
  double raw = 0.0;
  for (const auto& s : slices) {
    const ClosedCurve& c = s.curve;
    ClosedCurve ch = ClosedCurve::analytic(
        d - 1, [c, drop](double t) { return drop(c.eval(t)); },
        [c, drop](double t) { return drop(c.deriv(t)); }, c.source() + ":in-plane");
    const LinkingResult r =
        degree_linking(mh, PatchManifold::from_curve(ch), tol, 16, 1024);
    raw += s.sign * r.raw;
    q.evaluations += r.quadrature.evaluations;
    q.refinements += r.quadrature.refinements;
    q.error_estimate += r.quadrature.error_estimate;
    if (q.nodes_per_dim.empty() ||
        r.quadrature.nodes_per_dim[0] > q.nodes_per_dim[0])
      q.nodes_per_dim = r.quadrature.nodes_per_dim;
  }
  return make_linking_result(raw, q);
}

HomotopyReport homotopy_invariance_check(const std::function<Scene(double)>& family,
                                         int samples, double tol) {
  if (samples < 2) throw Error("homotopy_invariance_check: need >= 2 samples");
  HomotopyReport report;
  for (int j = 0; j < samples; ++j) {
    const double lambda = static_cast<double>(j) / (samples - 1);
    Scene scene = family(lambda);
    if (scene.objects.size() < 2)
      throw Error("homotopy_invariance_check: scene needs two objects");
    try {
      check_scene_disjoint(scene);
    } catch (const DisjointnessViolation& e) {
      throw DisjointnessViolation(std::string(e.what()) +
                                      " (family parameter lambda=" +
                                      std::to_string(lambda) + ")",
                                  lambda);
    }
    const SceneObject& a = scene.objects[0];
    const SceneObject& b = scene.objects[1];
    LinkingResult r;
    if (a.is_curve() && b.is_curve() && scene.ambient_dim == 3) {
      r = gauss_linking_r3(a.curve(), b.curve(), tol);
    } else {
      PatchManifold pm = a.is_curve() ? PatchManifold::from_curve(a.curve()) : a.patch();
      PatchManifold pn = b.is_curve() ? PatchManifold::from_curve(b.curve()) : b.patch();
      r = degree_linking(pm, pn, tol);
    }
    report.lambdas.push_back(lambda);
    report.values.push_back(r);
  }
  report.passed = true;
  for (const auto& v : report.values) {
    if (v.rounded != report.values[0].rounded || !v.certified()) {
      report.passed = false;
      break;
    }
  }
  return report;
}

}  // namespace linkint
