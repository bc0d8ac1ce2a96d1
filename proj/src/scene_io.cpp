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

#include "linkint/scene_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "linkint/builtins.hpp"

namespace linkint {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SceneParseError(where + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) fail(where, "unknown field '" + key + "'");
}

double num(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::vector<double> num_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(num(v, where));
  return out;
}

Vec vec_of(const std::vector<double>& xs, int dim, const std::string& where) {
  if (static_cast<int>(xs.size()) != dim)
    fail(where, "expected " + std::to_string(dim) + " coordinates");
  return Vec::of(xs);
}

SceneObject parse_object(const json& j, int ambient_dim, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  reject_unknown(j, {"name", "kind", "family", "params", "vertices"}, where);
  if (!j.contains("name") || !j.at("name").is_string() ||
      j.at("name").get<std::string>().empty())
    fail(where, "required non-empty string field 'name'");
  if (!j.contains("kind") || !j.at("kind").is_string())
    fail(where, "required string field 'kind'");
  const std::string name = j.at("name").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();

  SceneObject obj;
  obj.name = name;

  if (kind == "builtin") {
    if (j.contains("vertices")) fail(where, "'vertices' not allowed for kind builtin");
    if (!j.contains("family") || !j.at("family").is_string())
      fail(where, "builtin objects need a string field 'family'");
    const std::string family = j.at("family").get<std::string>();
    std::vector<double> params;
    if (j.contains("params")) params = num_list(j.at("params"), where + ".params");

    if (family == "circle") {
      // [axis_i, axis_j, radius, center...]
      if (static_cast<int>(params.size()) != 3 + ambient_dim)
        fail(where, "circle params: [axis_i, axis_j, radius, center x ambient_dim]");
      const int ai = static_cast<int>(params[0]);
      const int aj = static_cast<int>(params[1]);
      const Vec center = vec_of({params.begin() + 3, params.end()}, ambient_dim,
                                where + ".params");
      obj.geometry = circle_curve(center, params[2], ai, aj);
    } else if (family == "torus_cable") {
      if (ambient_dim != 3) fail(where, "torus_cable requires ambient_dim 3");
      if (params.size() != 3) fail(where, "torus_cable params: [wraps, rho, major_R]");
      obj.geometry = torus_cable_curve(static_cast<int>(params[0]), params[1], params[2]);
    } else if (family == "torus_knot") {
      if (ambient_dim != 3) fail(where, "torus_knot requires ambient_dim 3");
      if (params.size() != 4) fail(where, "torus_knot params: [p, q, R, r]");
      obj.geometry = torus_knot_curve(static_cast<int>(params[0]),
                                      static_cast<int>(params[1]), params[2], params[3]);
    } else if (family == "sphere2") {
      if (static_cast<int>(params.size()) != 1 + ambient_dim)
        fail(where, "sphere2 params: [radius, center x ambient_dim]");
      const Vec center =
          vec_of({params.begin() + 1, params.end()}, ambient_dim, where + ".params");
      obj.geometry = sphere_patch(center, params[0]);
    } else {
      fail(where, "unknown family '" + family + "'");
    }
  } else if (kind == "samples") {
    if (j.contains("family") || j.contains("params"))
      fail(where, "'family'/'params' not allowed for kind samples");
    if (!j.contains("vertices") || !j.at("vertices").is_array())
      fail(where, "samples objects need an array field 'vertices'");
    std::vector<Vec> verts;
    size_t vi = 0;
    for (const auto& v : j.at("vertices")) {
      const std::string vw = where + ".vertices[" + std::to_string(vi++) + "]";
      verts.push_back(vec_of(num_list(v, vw), ambient_dim, vw));
    }
    if (verts.size() < 8) fail(where, "samples objects need >= 8 vertices");
    for (size_t i = 0; i < verts.size(); ++i) {
      if (distance(verts[i], verts[(i + 1) % verts.size()]) <= 1e-12)
        fail(where, "consecutive vertices coincide");
    }
    obj.geometry = ClosedCurve::from_samples(verts);
  } else {
    fail(where, "kind must be 'builtin' or 'samples'");
  }

  if (obj.ambient_dim() != ambient_dim) fail(where, "object has wrong ambient dimension");
  return obj;
}

}  // namespace

Scene parse_scene(const std::string& json_text, const std::string& name) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // Turn the byte offset into a line/column diagnostic.
    size_t line = 1, col = 1;
    for (size_t i = 0; i < e.byte && i < json_text.size(); ++i) {
      if (json_text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SceneParseError(name + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + e.what());
  }

  if (!root.is_object()) fail(name, "top level must be an object");
  reject_unknown(root, {"ambient_dim", "objects", "expected"}, name);
  if (!root.contains("ambient_dim") || !root.at("ambient_dim").is_number_integer())
    fail(name, "required integer field 'ambient_dim'");
  const int d = root.at("ambient_dim").get<int>();
  if (d < 2 || d > kMaxDim) fail(name, "ambient_dim out of range [2, 8]");
  if (!root.contains("objects") || !root.at("objects").is_array() ||
      root.at("objects").empty())
    fail(name, "required non-empty array field 'objects'");

  Scene scene;
  scene.name = name;
  scene.ambient_dim = d;
  size_t oi = 0;
  for (const auto& jobj : root.at("objects")) {
    const std::string where = name + ".objects[" + std::to_string(oi++) + "]";
    SceneObject obj = parse_object(jobj, d, where);
    if (scene.has_object(obj.name)) fail(where, "duplicate object name '" + obj.name + "'");
    scene.objects.push_back(std::move(obj));
  }

  if (root.contains("expected")) {
    if (!root.at("expected").is_array()) fail(name, "'expected' must be an array");
    size_t ei = 0;
    for (const auto& je : root.at("expected")) {
      const std::string where = name + ".expected[" + std::to_string(ei++) + "]";
      if (!je.is_object()) fail(where, "expected an object");
      reject_unknown(je, {"pair", "value", "provenance"}, where);
      if (!je.contains("pair") || !je.at("pair").is_array() || je.at("pair").size() != 2)
        fail(where, "required field 'pair' with two object names");
      ExpectedValue ev;
      ev.a = je.at("pair")[0].get<std::string>();
      ev.b = je.at("pair")[1].get<std::string>();
      if (!scene.has_object(ev.a) || !scene.has_object(ev.b))
        fail(where, "pair names unknown object");
      if (!je.contains("value")) fail(where, "required numeric field 'value'");
      ev.value = num(je.at("value"), where + ".value");
      if (je.contains("provenance")) ev.provenance = je.at("provenance").get<std::string>();
      scene.expected.push_back(std::move(ev));
    }
  }

  check_scene_disjoint(scene);
  return scene;
}

Scene load_scene(const std::string& path) {
  if (path.rfind("builtin:", 0) == 0) {
    return builtin_scene(path.substr(8));
  }
  std::ifstream in(path);
  if (!in) throw SceneParseError(path + ": cannot open scene file");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  const size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  const size_t dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return parse_scene(ss.str(), name);
}

}  // namespace linkint
