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
#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkint {

// Largest ambient dimension handled by the fixed-capacity vector type.
inline constexpr int kMaxDim = 8;

/// Small dense vector in R^d, d <= kMaxDim. Doubles as a point.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("Vec: bad dimension");
  }
  Vec(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
    if (dim_ > kMaxDim) throw std::invalid_argument("Vec: bad dimension");
    int i = 0;
    for (double x : xs) c_[i++] = x;
  }
  static Vec of(std::span<const double> xs) {
    Vec v(static_cast<int>(xs.size()));
    for (int i = 0; i < v.dim_; ++i) v.c_[i] = xs[i];
    return v;
  }

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  const double* data() const { return c_.data(); }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < dim_; ++i) c_[i] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) {
    for (int i = 0; i < a.dim_; ++i) a.c_[i] = -a.c_[i];
    return a;
  }

  bool all_finite() const {
    for (int i = 0; i < dim_; ++i)
      if (!std::isfinite(c_[i])) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

using Point = Vec;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(squared_norm(a)); }
inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]};
}

/// Base class for every error this library raises on bad input or failed
/// numerical preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ImmersionFailure : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class DisjointnessViolation : public Error {
 public:
  explicit DisjointnessViolation(const std::string& msg, double at_lambda = -1.0)
      : Error(msg), lambda(at_lambda) {}
  // Parameter of the deformation family at which disjointness broke, or -1
  // when the violation is not part of a family sweep.
  double lambda;
};

class PointOnCurve : public Error {
 public:
  using Error::Error;
};

class PointOnBoundary : public Error {
 public:
  using Error::Error;
};

class NonTransverse : public Error {
 public:
  using Error::Error;
};

class OpenContour : public Error {
 public:
  using Error::Error;
};

class NonGenericProjection : public Error {
 public:
  using Error::Error;
};

class SceneParseError : public Error {
 public:
  using Error::Error;
};

/// An integrand returned a non-finite value; carries the offending node.
class NonFiniteSample : public Error {
 public:
  NonFiniteSample(const std::string& msg, std::vector<double> at)
      : Error(msg), node(std::move(at)) {}
  std::vector<double> node;
};

inline double wrap_unit(double t) {
  double r = t - std::floor(t);
  return r == 1.0 ? 0.0 : r;
}

}  // namespace linkint
