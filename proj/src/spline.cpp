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

#include "linkint/spline.hpp"

#include <cmath>
#include <stdexcept>

namespace linkint {

namespace {

// Solves the cyclic tridiagonal system (1, 4, 1) x = r via Sherman-Morrison
// on top of the Thomas algorithm. The matrix is strictly diagonally dominant.
std::vector<double> solve_cyclic_141(const std::vector<double>& r) {
  const int n = static_cast<int>(r.size());
  const double alpha = 1.0;  // bottom-left corner
  const double beta = 1.0;   // top-right corner
  const double gamma = -4.0;

  std::vector<double> diag(n, 4.0);
  diag[0] -= gamma;
  diag[n - 1] -= alpha * beta / gamma;

  auto thomas = [&](const std::vector<double>& rhs) {
    std::vector<double> c(n), x(n);
    double b = diag[0];
    x[0] = rhs[0] / b;
    for (int i = 1; i < n; ++i) {
      c[i] = 1.0 / b;
      b = diag[i] - c[i];
      x[i] = (rhs[i] - x[i - 1]) / b;
    }
    for (int i = n - 2; i >= 0; --i) x[i] -= c[i + 1] * x[i + 1];
    return x;
  };

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;

  std::vector<double> y = thomas(r);
  std::vector<double> z = thomas(u);

  const double vy = y[0] + beta / gamma * y[n - 1];
  const double vz = z[0] + beta / gamma * z[n - 1];
  const double factor = vy / (1.0 + vz);
  for (int i = 0; i < n; ++i) y[i] -= factor * z[i];
  return y;
}

}  // namespace

PeriodicCubicSpline::PeriodicCubicSpline(const std::vector<Vec>& points) {
  n_ = static_cast<int>(points.size());
  if (n_ < 4) throw std::invalid_argument("PeriodicCubicSpline: need >= 4 points");
  dim_ = points[0].dim();
  h_ = 1.0 / n_;

  vals_.assign(dim_, std::vector<double>(n_));
  second_.assign(dim_, std::vector<double>(n_));
  for (int d = 0; d < dim_; ++d) {
    for (int i = 0; i < n_; ++i) vals_[d][i] = points[i][d];

    std::vector<double> rhs(n_);
    const double s = 6.0 / (h_ * h_);
    for (int i = 0; i < n_; ++i) {
      const double prev = vals_[d][(i + n_ - 1) % n_];
      const double next = vals_[d][(i + 1) % n_];
      rhs[i] = s * (prev - 2.0 * vals_[d][i] + next);
    }
    second_[d] = solve_cyclic_141(rhs);
  }
}

Vec PeriodicCubicSpline::eval(double t) const {
  const double u = wrap_unit(t) * n_;
  int i = static_cast<int>(u);
  if (i >= n_) i = n_ - 1;
  const int j = (i + 1) % n_;
  const double a = u - i;       // in [0,1) within the segment
  const double b = 1.0 - a;
  const double h2 = h_ * h_ / 6.0;

  Vec out(dim_);
  for (int d = 0; d < dim_; ++d) {
    const double mi = second_[d][i], mj = second_[d][j];
    out[d] = b * vals_[d][i] + a * vals_[d][j] +
             h2 * ((b * b * b - b) * mi + (a * a * a - a) * mj);
  }
  return out;
}

Vec PeriodicCubicSpline::deriv(double t) const {
  const double u = wrap_unit(t) * n_;
  int i = static_cast<int>(u);
  if (i >= n_) i = n_ - 1;
  const int j = (i + 1) % n_;
  const double a = u - i;
  const double b = 1.0 - a;

  Vec out(dim_);
  for (int d = 0; d < dim_; ++d) {
    const double mi = second_[d][i], mj = second_[d][j];
    out[d] = (vals_[d][j] - vals_[d][i]) / h_ +
             h_ / 6.0 * ((3.0 * a * a - 1.0) * mj - (3.0 * b * b - 1.0) * mi);
  }
  return out;
}

}  // namespace linkint
