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

// Kernel dispatch and drivers. The drivers split the outer loop into fixed
// 32-row blocks, compute block partials (possibly on several threads), and
// combine them with a fixed-order pairwise sum, so the result is bit-stable
// for any LK_WORKERS setting.

#include "linkint/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernels_internal.hpp"
#include "linkint/parallel.hpp"

namespace linkint::kernels {

namespace {

constexpr size_t kRowBlock = 32;

std::atomic<const RowKernels*> g_active{nullptr};

bool cpu_has_avx2() {
#if defined(LINKINT_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const RowKernels* pick_auto() {
#if defined(LINKINT_HAVE_AVX2)
  if (cpu_has_avx2()) return &avx2_kernels();
#endif
  return &scalar_kernels();
}

const RowKernels* resolve_from_env() {
  if (const char* env = std::getenv("LK_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
#if defined(LINKINT_HAVE_AVX2)
    if (std::strcmp(env, "avx2") == 0) {
      if (!cpu_has_avx2()) throw std::runtime_error("LK_KERNEL=avx2: CPU lacks AVX2");
      return &avx2_kernels();
    }
#endif
  }
  return pick_auto();
}

const RowKernels& active() {
  const RowKernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = resolve_from_env();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

}  // namespace

void set_impl(Impl impl) {
  switch (impl) {
    case Impl::Auto:
      g_active.store(pick_auto(), std::memory_order_release);
      break;
    case Impl::Scalar:
      g_active.store(&scalar_kernels(), std::memory_order_release);
      break;
    case Impl::Avx2:
#if defined(LINKINT_HAVE_AVX2)
      if (cpu_has_avx2()) {
        g_active.store(&avx2_kernels(), std::memory_order_release);
        break;
      }
#endif
      throw std::runtime_error("set_impl: AVX2 not available on this machine");
  }
}

std::string active_impl() { return active().name; }

bool avx2_available() { return cpu_has_avx2(); }

void CurveSamples3::resize(size_t n) {
  for (auto* v : {&x, &y, &z, &tx, &ty, &tz}) v->resize(n);
}

void CurveSamples4::resize(size_t n) {
  for (auto* v : {&x, &y, &z, &w, &tx, &ty, &tz, &tw}) v->resize(n);
}

void GridSamples4::resize(size_t n) {
  for (auto* v : {&x, &y, &z, &w, &ux, &uy, &uz, &uw, &vx, &vy, &vz, &vw})
    v->resize(n);
}

void PlanarSamples::resize(size_t n) {
  for (auto* v : {&x, &y, &tx, &ty}) v->resize(n);
}

double pair_sum3(const CurveSamples3& a, const CurveSamples3& b) {
  const RowKernels& k = active();
  const size_t rows = a.size();
  const size_t blocks = (rows + kRowBlock - 1) / kRowBlock;
  std::vector<double> partial(blocks, 0.0);
  parallel_for(blocks, [&](size_t bi) {
    const size_t lo = bi * kRowBlock;
    const size_t hi = std::min(lo + kRowBlock, rows);
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) {
      const double pt[3] = {a.x[i], a.y[i], a.z[i]};
      const double tan[3] = {a.tx[i], a.ty[i], a.tz[i]};
      s += k.row3(pt, tan, b, 0, b.size());
    }
    partial[bi] = s;
  });
  return pairwise_sum(partial);
}

double pair_sum4(const CurveSamples4& m, const GridSamples4& n) {
  const RowKernels& k = active();
  const size_t rows = m.size();
  const size_t blocks = (rows + kRowBlock - 1) / kRowBlock;
  std::vector<double> partial(blocks, 0.0);
  parallel_for(blocks, [&](size_t bi) {
    const size_t lo = bi * kRowBlock;
    const size_t hi = std::min(lo + kRowBlock, rows);
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) {
      const double pt[4] = {m.x[i], m.y[i], m.z[i], m.w[i]};
      const double tan[4] = {m.tx[i], m.ty[i], m.tz[i], m.tw[i]};
      s += k.row4(pt, tan, n, 0, n.size());
    }
    partial[bi] = s;
  });
  return pairwise_sum(partial);
}

double winding_sum2(const PlanarSamples& c, double px, double py) {
  return active().winding(c, px, py, 0, c.size());
}

double min_distance3(const CurveSamples3& a, const CurveSamples3& b) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      const double dx = b.x[j] - a.x[i];
      const double dy = b.y[j] - a.y[i];
      const double dz = b.z[j] - a.z[i];
      best = std::min(best, dx * dx + dy * dy + dz * dz);
    }
  }
  return std::sqrt(best);
}

}  // namespace linkint::kernels
