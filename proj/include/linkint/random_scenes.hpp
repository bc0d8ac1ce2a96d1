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

#include <random>

#include "linkint/geometry.hpp"

namespace linkint {

/// Random smooth scene in R^3 with g1 planar in {x3 = 0}: low-order Fourier
/// perturbations of a circle and of a transverse partner (Hopf-style, far
/// unlinked, or doubly wrapped cable). Rejection-sampled until immersion,
/// pairwise distance > 0.08, and transverse plane crossings hold, so every
/// produced scene is valid input for all three linking methods.
Scene random_planar_scene(std::mt19937_64& rng);

}  // namespace linkint
