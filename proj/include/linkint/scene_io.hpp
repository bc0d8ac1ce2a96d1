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

#include <string>

#include "linkint/geometry.hpp"

namespace linkint {

/// Parses a scene JSON document. Unknown fields are rejected; errors carry
/// line/field diagnostics. Object families: circle, torus_cable, torus_knot,
/// sphere2; kind "samples" takes explicit vertices (periodic cubic
/// interpolation). See the repository README for the exact schema.
Scene parse_scene(const std::string& json_text, const std::string& name);

/// Loads and parses a scene file; also accepts "builtin:<family>" names.
Scene load_scene(const std::string& path);

}  // namespace linkint
