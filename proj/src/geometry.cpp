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

#include "linkint/geometry.hpp"

#include <cmath>
#include <memory>

#include "linkint/spline.hpp"

namespace linkint {

ClosedCurve ClosedCurve::analytic(int dim, std::function<Vec(double)> pos,
                                  std::function<Vec(double)> vel,
                                  std::string source) {
  ClosedCurve c;
  c.dim_ = dim;
  c.pos_ = std::move(pos);
  c.vel_ = std::move(vel);
  c.source_ = std::move(source);
  return c;
}

ClosedCurve ClosedCurve::from_samples(const std::vector<Vec>& vertices) {
  auto spline = std::make_shared<PeriodicCubicSpline>(vertices);
  ClosedCurve c;
  c.dim_ = spline->dim();
  c.pos_ = [spline](double t) { return spline->eval(t); };
  c.vel_ = [spline](double t) { return spline->deriv(t); };
  c.source_ = "samples:" + std::to_string(vertices.size());
  return c;
}

ClosedCurve ClosedCurve::reversed() const {
  ClosedCurve c;
  c.dim_ = dim_;
  auto pos = pos_;
  auto vel = vel_;
  c.pos_ = [pos](double t) { return pos(wrap_unit(1.0 - t)); };
  c.vel_ = [vel](double t) { return -vel(wrap_unit(1.0 - t)); };
  c.source_ = source_ + ":reversed";
  return c;
}

Vec PatchManifold::eval(double u, double v) const {
  const double uu = periodic[0] ? wrap_unit(u) : u;
  const double vv = (intrinsic_dim > 1 && periodic[1]) ? wrap_unit(v) : v;
  return pos(uu, vv);
}

std::array<Vec, 2> PatchManifold::jacobian(double u, double v) const {
  const double uu = periodic[0] ? wrap_unit(u) : u;
  const double vv = (intrinsic_dim > 1 && periodic[1]) ? wrap_unit(v) : v;
  return jac(uu, vv);
}

PatchManifold PatchManifold::from_curve(const ClosedCurve& c) {
  PatchManifold p;
  p.intrinsic_dim = 1;
  p.ambient_dim = c.dim();
  p.periodic = {true, true};
  p.pos = [c](double u, double) { return c.eval(u); };
  p.jac = [c](double u, double) {
    return std::array<Vec, 2>{c.deriv(u), Vec(c.dim())};
  };
  p.source = c.source();
  return p;
}

int SceneObject::ambient_dim() const {
  return is_curve() ? curve().dim() : patch().ambient_dim;
}

Vec SceneObject::sample(double u, double v) const {
  return is_curve() ? curve().eval(u) : patch().eval(wrap_unit(u), wrap_unit(v));
}

const SceneObject& Scene::object(std::string_view nm) const {
  for (const auto& o : objects)
    if (o.name == nm) return o;
  throw Error("scene '" + name + "' has no object named '" + std::string(nm) + "'");
}

bool Scene::has_object(std::string_view nm) const {
  for (const auto& o : objects)
    if (o.name == nm) return true;
  return false;
}

// -- Isometry ------------------------------------------------------------

Isometry::Isometry(int dim, std::vector<double> rotation_row_major, Vec translation)
    : dim_(dim), rot_(std::move(rotation_row_major)), trans_(translation) {
  if (static_cast<int>(rot_.size()) != dim * dim || translation.dim() != dim)
    throw DimensionMismatch("Isometry: size mismatch");
  // R^T R = I to 1e-12
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double s = 0;
      for (int k = 0; k < dim; ++k) s += rot_[k * dim + i] * rot_[k * dim + j];
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(s - expect) > 1e-12)
        throw Error("Isometry: rotation not orthogonal");
    }
  }
  // det = +1, via Gaussian elimination with partial pivoting
  std::vector<double> m = rot_;
  double det = 1.0;
  for (int col = 0; col < dim; ++col) {
    int piv = col;
    for (int r = col + 1; r < dim; ++r)
      if (std::abs(m[r * dim + col]) > std::abs(m[piv * dim + col])) piv = r;
    if (piv != col) {
      for (int k = 0; k < dim; ++k) std::swap(m[piv * dim + k], m[col * dim + k]);
      det = -det;
    }
    det *= m[col * dim + col];
    if (m[col * dim + col] == 0.0) break;
    for (int r = col + 1; r < dim; ++r) {
      const double f = m[r * dim + col] / m[col * dim + col];
      for (int k = col; k < dim; ++k) m[r * dim + k] -= f * m[col * dim + k];
    }
  }
  if (std::abs(det - 1.0) > 1e-9) throw Error("Isometry: rotation must have det +1");
}

Isometry Isometry::identity(int dim) {
  std::vector<double> r(dim * dim, 0.0);
  for (int i = 0; i < dim; ++i) r[i * dim + i] = 1.0;
  return Isometry(dim, std::move(r), Vec(dim));
}

Isometry Isometry::translation(const Vec& t) {
  Isometry g = identity(t.dim());
  g.trans_ = t;
  return g;
}

namespace {

// Gram-Schmidt on a random Gaussian matrix; flips one column if det < 0.
std::vector<double> random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> cols(dim, std::vector<double>(dim));
  for (int j = 0; j < dim; ++j) {
    for (;;) {
      for (int i = 0; i < dim; ++i) cols[j][i] = gauss(rng);
      for (int k = 0; k < j; ++k) {
        double d = 0;
        for (int i = 0; i < dim; ++i) d += cols[j][i] * cols[k][i];
        for (int i = 0; i < dim; ++i) cols[j][i] -= d * cols[k][i];
      }
      double n2 = 0;
      for (int i = 0; i < dim; ++i) n2 += cols[j][i] * cols[j][i];
      if (n2 > 1e-12) {
        const double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < dim; ++i) cols[j][i] *= inv;
        break;
      }
    }
  }
  std::vector<double> r(dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r[i * dim + j] = cols[j][i];
  // determinant sign fix: try constructing, flip last column on failure
  try {
    Isometry probe(dim, r, Vec(dim));
    return r;
  } catch (const Error&) {
    for (int i = 0; i < dim; ++i) r[i * dim + dim - 1] = -r[i * dim + dim - 1];
    return r;
  }
}

}  // namespace

Isometry Isometry::random_rotation(int dim, std::mt19937_64& rng) {
  return Isometry(dim, random_orthogonal(dim, rng), Vec(dim));
}

Isometry Isometry::random_rotation_fixing(int dim, int axis, std::mt19937_64& rng) {
  std::vector<double> sub = random_orthogonal(dim - 1, rng);
  std::vector<double> r(dim * dim, 0.0);
  r[axis * dim + axis] = 1.0;
  std::vector<int> rest;
  for (int i = 0; i < dim; ++i)
    if (i != axis) rest.push_back(i);
  for (int i = 0; i < dim - 1; ++i)
    for (int j = 0; j < dim - 1; ++j)
      r[rest[i] * dim + rest[j]] = sub[i * (dim - 1) + j];
  return Isometry(dim, std::move(r), Vec(dim));
}

Vec Isometry::apply(const Vec& p) const {
  if (p.dim() != dim_) throw DimensionMismatch("Isometry::apply: dimension mismatch");
  Vec out = rotate(p);
  return out + trans_;
}

Vec Isometry::rotate(const Vec& v) const {
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    double s = 0;
    for (int j = 0; j < dim_; ++j) s += rot_[i * dim_ + j] * v[j];
    out[i] = s;
  }
  return out;
}

// -- operations ----------------------------------------------------------

Vec eval_curve(const ClosedCurve& c, double t) { return c.eval(t); }

Vec tangent(const ClosedCurve& c, double t) {
  Vec v = c.deriv(t);
  if (norm(v) < 1e-9)
    throw ImmersionFailure("tangent: |derivative| < 1e-9 at t=" + std::to_string(t));
  return v;
}

Polyline sample_polyline(const ClosedCurve& c, int n) {
  if (n < 8) throw Error("sample_polyline: need n >= 8");
  Polyline p;
  p.vertices.reserve(n);
  for (int k = 0; k < n; ++k) {
    tangent(c, static_cast<double>(k) / n);  // propagate ImmersionFailure
    p.vertices.push_back(c.eval(static_cast<double>(k) / n));
  }
  return p;
}

ClosedCurve apply_isometry(const ClosedCurve& c, const Isometry& g) {
  if (c.dim() != g.dim()) throw DimensionMismatch("apply_isometry: dimension mismatch");
  return ClosedCurve::analytic(
      c.dim(), [c, g](double t) { return g.apply(c.eval(t)); },
      [c, g](double t) { return g.rotate(c.deriv(t)); }, c.source() + ":moved");
}

PatchManifold apply_isometry(const PatchManifold& p, const Isometry& g) {
  if (p.ambient_dim != g.dim())
    throw DimensionMismatch("apply_isometry: dimension mismatch");
  PatchManifold out = p;
  auto pos = p.pos;
  auto jac = p.jac;
  out.pos = [pos, g](double u, double v) { return g.apply(pos(u, v)); };
  out.jac = [jac, g, n = p.intrinsic_dim](double u, double v) {
    auto cols = jac(u, v);
    std::array<Vec, 2> moved{Vec(g.dim()), Vec(g.dim())};
    for (int i = 0; i < n; ++i) moved[i] = g.rotate(cols[i]);
    return moved;
  };
  out.source = p.source + ":moved";
  return out;
}

Scene apply_isometry(const Scene& s, const Isometry& g) {
  Scene out;
  out.name = s.name;
  out.ambient_dim = s.ambient_dim;
  out.expected = s.expected;
  for (const auto& o : s.objects) {
    SceneObject moved;
    moved.name = o.name;
    if (o.is_curve())
      moved.geometry = apply_isometry(o.curve(), g);
    else
      moved.geometry = apply_isometry(o.patch(), g);
    out.objects.push_back(std::move(moved));
  }
  return out;
}

double min_pair_distance(const SceneObject& a, const SceneObject& b,
                         int samples_per_dim) {
  const int n = samples_per_dim;
  auto collect = [n](const SceneObject& o) {
    std::vector<Vec> pts;
    if (o.intrinsic_dim() == 1) {
      pts.reserve(n);
      for (int i = 0; i < n; ++i) pts.push_back(o.sample(static_cast<double>(i) / n));
    } else {
      const int m = std::max(16, n / 4);
      pts.reserve(m * m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          pts.push_back(o.sample(static_cast<double>(i) / m + 0.5 / m,
                                 static_cast<double>(j) / m));
    }
    return pts;
  };
  const auto pa = collect(a);
  const auto pb = collect(b);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : pa)
    for (const auto& y : pb) best = std::min(best, distance(x, y));
  return best;
}

void check_scene_disjoint(const Scene& s, int samples_per_dim) {
  for (size_t i = 0; i < s.objects.size(); ++i) {
    for (size_t j = i + 1; j < s.objects.size(); ++j) {
      const double d = min_pair_distance(s.objects[i], s.objects[j], samples_per_dim);
      if (d <= kDisjointnessThreshold)
        throw DisjointnessViolation("objects '" + s.objects[i].name + "' and '" +
                                    s.objects[j].name +
                                    "' are closer than 1e-6 (sampled distance " +
                                    std::to_string(d) + ")");
    }
  }
}

}  // namespace linkint
