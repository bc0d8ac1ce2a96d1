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

#include <cstddef>
#include <string>
#include <vector>

namespace linkint::kernels {

// Structure-of-arrays sample buffers for the linking integrands. Quadrature
// weights are folded into the tangent columns before the kernels run, so the
// kernels are pure determinant/norm accumulations.

struct CurveSamples3 {
  std::vector<double> x, y, z;     // points
  std::vector<double> tx, ty, tz;  // weighted tangents
  size_t size() const { return x.size(); }
  void resize(size_t n);
};

struct CurveSamples4 {
  std::vector<double> x, y, z, w;
  std::vector<double> tx, ty, tz, tw;
  size_t size() const { return x.size(); }
  void resize(size_t n);
};

struct GridSamples4 {
  std::vector<double> x, y, z, w;       // points
  std::vector<double> ux, uy, uz, uw;   // first weighted Jacobian column
  std::vector<double> vx, vy, vz, vw;   // second Jacobian column
  size_t size() const { return x.size(); }
  void resize(size_t n);
};

struct PlanarSamples {
  std::vector<double> x, y;
  std::vector<double> tx, ty;
  size_t size() const { return x.size(); }
  void resize(size_t n);
};

/// sum_{i,j} det(b_j - a_i, ta_i, tb_j) / ||b_j - a_i||^3
double pair_sum3(const CurveSamples3& a, const CurveSamples3& b);

/// sum_{i,j} det4(n_j - m_i, tm_i, nu_j, nv_j) / ||n_j - m_i||^4
double pair_sum4(const CurveSamples4& m, const GridSamples4& n);

/// sum_j det2(c_j - p, tc_j) / ||c_j - p||^2
double winding_sum2(const PlanarSamples& c, double px, double py);

/// Minimum distance between the two point sets (no tangents involved).
double min_distance3(const CurveSamples3& a, const CurveSamples3& b);

enum class Impl { Auto, Scalar, Avx2 };

/// Overrides dispatch; Impl::Auto restores runtime detection. The environment
/// variable LK_KERNEL (scalar|avx2|auto) is honored at startup.
void set_impl(Impl impl);
std::string active_impl();
bool avx2_available();

}  // namespace linkint::kernels
