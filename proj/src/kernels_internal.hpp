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

#include "linkint/kernels.hpp"

namespace linkint::kernels {

// Row kernels: the inner data-parallel loops. Each computes the contribution
// of one fixed sample against a full SoA buffer. Implemented twice (scalar
// reference and AVX2); the drivers in kernels.cpp select one at runtime and
// handle blocking, threading, and the deterministic reduction.

struct RowKernels {
  // sum_j det(b_j - a, ta, tb_j) / ||b_j - a||^3
  double (*row3)(const double a[3], const double ta[3], const CurveSamples3& b,
                 size_t begin, size_t end);
  // sum_j det4(n_j - m, tm, nu_j, nv_j) / ||n_j - m||^4
  double (*row4)(const double m[4], const double tm[4], const GridSamples4& n,
                 size_t begin, size_t end);
  // sum_j det2(c_j - p, tc_j) / ||c_j - p||^2
  double (*winding)(const PlanarSamples& c, double px, double py, size_t begin,
                    size_t end);
  const char* name;
};

const RowKernels& scalar_kernels();

#ifdef LINKINT_HAVE_AVX2
const RowKernels& avx2_kernels();
#endif

}  // namespace linkint::kernels
