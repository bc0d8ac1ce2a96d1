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

// Scalar reference kernels. The SIMD variants must agree with these to
// rounding differences only; the equivalence tests pin that down.

#include <cmath>

#include "kernels_internal.hpp"

namespace linkint::kernels {

namespace {

double row3_scalar(const double a[3], const double ta[3], const CurveSamples3& b,
                   size_t begin, size_t end) {
  double sum = 0.0;
  for (size_t j = begin; j < end; ++j) {
    const double rx = b.x[j] - a[0];
    const double ry = b.y[j] - a[1];
    const double rz = b.z[j] - a[2];
    // det(r, ta, tb) = r . (ta x tb)
    const double cx = ta[1] * b.tz[j] - ta[2] * b.ty[j];
    const double cy = ta[2] * b.tx[j] - ta[0] * b.tz[j];
    const double cz = ta[0] * b.ty[j] - ta[1] * b.tx[j];
    const double det = rx * cx + ry * cy + rz * cz;
    const double n2 = rx * rx + ry * ry + rz * rz;
    sum += det / (n2 * std::sqrt(n2));
  }
  return sum;
}

double row4_scalar(const double m[4], const double tm[4], const GridSamples4& n,
                   size_t begin, size_t end) {
  double sum = 0.0;
  for (size_t j = begin; j < end; ++j) {
    const double r0 = n.x[j] - m[0];
    const double r1 = n.y[j] - m[1];
    const double r2 = n.z[j] - m[2];
    const double r3 = n.w[j] - m[3];
    // 4x4 determinant of columns (r, tm, nu, nv) by 2x2 minor expansion:
    // det = m01 n23 - m02 n13 + m03 n12 + m12 n03 - m13 n02 + m23 n01,
    // with m_ij from the first column pair and n_kl from the second.
    const double m01 = r0 * tm[1] - r1 * tm[0];
    const double m02 = r0 * tm[2] - r2 * tm[0];
    const double m03 = r0 * tm[3] - r3 * tm[0];
    const double m12 = r1 * tm[2] - r2 * tm[1];
    const double m13 = r1 * tm[3] - r3 * tm[1];
    const double m23 = r2 * tm[3] - r3 * tm[2];
    const double n01 = n.ux[j] * n.vy[j] - n.uy[j] * n.vx[j];
    const double n02 = n.ux[j] * n.vz[j] - n.uz[j] * n.vx[j];
    const double n03 = n.ux[j] * n.vw[j] - n.uw[j] * n.vx[j];
    const double n12 = n.uy[j] * n.vz[j] - n.uz[j] * n.vy[j];
    const double n13 = n.uy[j] * n.vw[j] - n.uw[j] * n.vy[j];
    const double n23 = n.uz[j] * n.vw[j] - n.uw[j] * n.vz[j];
    const double det =
        m01 * n23 - m02 * n13 + m03 * n12 + m12 * n03 - m13 * n02 + m23 * n01;
    const double n2 = r0 * r0 + r1 * r1 + r2 * r2 + r3 * r3;
    sum += det / (n2 * n2);
  }
  return sum;
}

double winding_scalar(const PlanarSamples& c, double px, double py, size_t begin,
                      size_t end) {
  double sum = 0.0;
  for (size_t j = begin; j < end; ++j) {
    const double rx = c.x[j] - px;
    const double ry = c.y[j] - py;
    const double det = rx * c.ty[j] - ry * c.tx[j];
    sum += det / (rx * rx + ry * ry);
  }
  return sum;
}

}  // namespace

const RowKernels& scalar_kernels() {
  static const RowKernels k{row3_scalar, row4_scalar, winding_scalar, "scalar"};
  return k;
}

}  // namespace linkint::kernels
