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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "linkint/scene_io.hpp"

using namespace linkint;

namespace {
const std::string kScenesDir = std::string(LINKINT_SOURCE_DIR) + "/scenes/";
}

TEST_CASE("loads the shipped hopf scene") {
  const Scene s = load_scene(kScenesDir + "hopf.json");
  CHECK(s.name == "hopf");
  CHECK(s.ambient_dim == 3);
  REQUIRE(s.objects.size() == 2);
  CHECK(s.object("g1").is_curve());
  REQUIRE(s.expected.size() == 1);
  CHECK(s.expected[0].value == 1.0);
  CHECK(norm(s.object("g1").curve().eval(0.0) - Vec{1, 0, 0}) < 1e-12);
}

TEST_CASE("loads the spun pair with a sphere patch") {
  const Scene s = load_scene(kScenesDir + "spun_pair.json");
  CHECK(s.ambient_dim == 4);
  CHECK(!s.object("n").is_curve());
  CHECK(s.object("n").patch().intrinsic_dim == 2);
}

TEST_CASE("builtin pseudo-paths resolve") {
  const Scene s = load_scene("builtin:hopf_r3");
  CHECK(s.objects.size() == 2);
  CHECK_THROWS_AS(load_scene("builtin:nonsense"), UnknownFamily);
}

TEST_CASE("unknown fields are rejected with a path") {
  const std::string text = R"({
    "ambient_dim": 3,
    "objects": [
      {"name": "g1", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 0, 0, 0]},
      {"name": "g2", "kind": "builtin", "family": "circle", "params": [0, 2, 1.0, 1, 0, 0]}
    ],
    "comment": "not allowed"
  })";
  try {
    parse_scene(text, "t");
    FAIL("expected SceneParseError");
  } catch (const SceneParseError& e) {
    CHECK(std::string(e.what()).find("comment") != std::string::npos);
  }
}

TEST_CASE("malformed json reports line and column") {
  try {
    parse_scene("{\n  \"ambient_dim\": 3,\n  \"objects\": [}\n", "bad");
    FAIL("expected SceneParseError");
  } catch (const SceneParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("bad:3") != std::string::npos);
  }
}

TEST_CASE("sampled objects build interpolated curves") {
  std::string verts;
  const int n = 64;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    verts += (i ? "," : "");
    verts += "[" + std::to_string(std::cos(t)) + "," + std::to_string(std::sin(t)) +
             ",0]";
  }
  const std::string text = R"({"ambient_dim": 3, "objects": [
    {"name": "c", "kind": "samples", "vertices": [)" +
                           verts + R"(]},
    {"name": "far", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 5, 0, 0]}
  ]})";
  const Scene s = parse_scene(text, "sampled");
  const Vec p = s.object("c").curve().eval(0.25);
  CHECK(std::abs(p[0]) < 1e-3);
  CHECK(std::abs(p[1] - 1.0) < 1e-3);
}

TEST_CASE("schema violations carry the offending object path") {
  const char* cases[] = {
      // bad kind
      R"({"ambient_dim": 3, "objects": [{"name": "a", "kind": "mesh"}]})",
      // missing family
      R"({"ambient_dim": 3, "objects": [{"name": "a", "kind": "builtin"}]})",
      // wrong param count
      R"({"ambient_dim": 3, "objects": [{"name": "a", "kind": "builtin", "family": "circle", "params": [0, 1]}]})",
      // unknown family
      R"({"ambient_dim": 3, "objects": [{"name": "a", "kind": "builtin", "family": "lemniscate", "params": []}]})",
      // duplicate names
      R"({"ambient_dim": 3, "objects": [
        {"name": "a", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 0, 0, 0]},
        {"name": "a", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 5, 0, 0]}]})",
      // expected names an unknown object
      R"({"ambient_dim": 3, "objects": [
        {"name": "a", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 0, 0, 0]},
        {"name": "b", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 5, 0, 0]}],
        "expected": [{"pair": ["a", "zz"], "value": 0}]})",
      // ambient_dim out of range
      R"({"ambient_dim": 1, "objects": []})",
  };
  for (const char* text : cases) CHECK_THROWS_AS(parse_scene(text, "t"), SceneParseError);
}

TEST_CASE("non-disjoint scenes are rejected at load time") {
  const std::string text = R"({"ambient_dim": 3, "objects": [
    {"name": "a", "kind": "builtin", "family": "circle", "params": [0, 1, 1.0, 0, 0, 0]},
    {"name": "b", "kind": "builtin", "family": "circle", "params": [0, 2, 1.0, 2, 0, 0]}
  ]})";
  // the two circles intersect at (1, 0, 0)
  CHECK_THROWS_AS(parse_scene(text, "touching"), DisjointnessViolation);
}

TEST_CASE("all shipped scenes parse and are disjoint") {
  for (const char* f :
       {"hopf.json", "unlink.json", "torus24.json", "spun_pair.json",
        "separated_pair.json"}) {
    CHECK_NOTHROW(load_scene(kScenesDir + f));
  }
}
