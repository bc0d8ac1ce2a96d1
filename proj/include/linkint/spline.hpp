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

#include <vector>

#include "linkint/types.hpp"

namespace linkint {

/// Periodic cubic interpolation through points at uniform parameters k/n,
/// k = 0..n-1, with period 1. C2 everywhere, so sampled curves have smooth
/// derivatives for the quadrature paths.
class PeriodicCubicSpline {
 public:
  explicit PeriodicCubicSpline(const std::vector<Vec>& points);

  Vec eval(double t) const;
  Vec deriv(double t) const;

  int size() const { return n_; }
  int dim() const { return dim_; }

 private:
  int n_ = 0;
  int dim_ = 0;
  double h_ = 0;
  // Per coordinate: interpolated values and second derivatives at the knots.
  std::vector<std::vector<double>> vals_;
  std::vector<std::vector<double>> second_;
};

}  // namespace linkint
