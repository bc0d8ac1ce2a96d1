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
#include <functional>
#include <span>

namespace linkint {

/// Worker cap: LK_WORKERS environment variable, or hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n). Work items must write to disjoint state; the
/// assignment of items to threads is unspecified, so results must not depend
/// on it.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

/// Fixed-order pairwise sum; independent of how the entries were produced.
double pairwise_sum(std::span<const double> xs);

}  // namespace linkint
