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

#include "linkint/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "linkint/builtins.hpp"
#include "linkint/invariants.hpp"
#include "linkint/kernels.hpp"
#include "linkint/oracles.hpp"
#include "linkint/reduction.hpp"
#include "linkint/scene_io.hpp"

namespace linkint::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Detects a component lying in some axis plane {x_k = c} (to 1e-9).
struct PlanarAxis {
  bool found = false;
  int axis = -1;
  double offset = 0.0;
};

PlanarAxis find_planar_axis(const SceneObject& o, int preferred_axis = -1) {
  const int d = o.ambient_dim();
  std::vector<int> order;
  if (preferred_axis >= 0) order.push_back(preferred_axis);
  for (int k = 0; k < d; ++k)
    if (k != preferred_axis) order.push_back(k);
  for (int k : order) {
    const double c = o.sample(0.0)[k];
    bool flat = true;
    for (int i = 0; i < 512 && flat; ++i)
      flat = std::abs(o.sample(static_cast<double>(i) / 512)[k] - c) <= 1e-9;
    if (flat) return {true, k, c};
  }
  return {};
}

void fill_from(MethodResult& m, const LinkingResult& r) {
  m.status = "ok";
  m.raw = r.raw;
  m.rounded = r.rounded;
  m.residual = r.residual;
  m.certified = r.certified();
  m.nodes = r.quadrature.nodes_per_dim;
  m.evaluations = r.quadrature.evaluations;
}

void fill_error(MethodResult& m, const Error& e) {
  m.status = "error";
  m.note = e.what();
  if (dynamic_cast<const NonTransverse*>(&e))
    m.note += " (hint: pre-rotate the scene into general position)";
}

MethodResult run_method_gauss(const Scene& scene, const SceneObject& a,
                              const SceneObject& b, const Options& opt) {
  MethodResult m;
  m.method = "gauss";
  if (scene.ambient_dim != 3 || !a.is_curve() || !b.is_curve()) {
    m.status = "skipped";
    m.note = "not applicable (d=" + std::to_string(scene.ambient_dim) +
             ", needs two curves in R^3)";
    return m;
  }
  const auto t0 = Clock::now();
  try {
    fill_from(m, gauss_linking_r3(a.curve(), b.curve(), opt.tol, 16,
                                  opt.max_nodes > 0 ? opt.max_nodes : 1024));
  } catch (const ToleranceNotReached& e) {
    fill_from(m, make_linking_result(e.best.value, e.best));
    m.status = "error";
    m.note = std::string(e.what()) + " (hint: raise --max-nodes)";
    m.certified = false;
  } catch (const Error& e) {
    fill_error(m, e);
  }
  m.wall_ms = ms_since(t0);
  return m;
}

MethodResult run_method_degree(const Scene& scene, const SceneObject& a,
                               const SceneObject& b, const Options& opt) {
  MethodResult m;
  m.method = "degree";
  const int ma = a.intrinsic_dim(), nb = b.intrinsic_dim();
  const bool supported =
      (ma + nb + 1 == scene.ambient_dim) &&
      ((ma == 1 && nb == 1) || (ma == 1 && nb == 2) || (ma == 2 && nb == 1));
  if (!supported) {
    m.status = "skipped";
    m.note = "not applicable (d=" + std::to_string(scene.ambient_dim) + ", m=" +
             std::to_string(ma) + ", n=" + std::to_string(nb) + ")";
    return m;
  }
  const auto t0 = Clock::now();
  try {
    const PatchManifold M =
        a.is_curve() ? PatchManifold::from_curve(a.curve()) : a.patch();
    const PatchManifold N =
        b.is_curve() ? PatchManifold::from_curve(b.curve()) : b.patch();
    const int defmax = (ma + nb == 2) ? 1024 : 256;
    fill_from(m, degree_linking(M, N, opt.tol, 16,
                                opt.max_nodes > 0 ? opt.max_nodes : defmax));
  } catch (const ToleranceNotReached& e) {
    fill_from(m, make_linking_result(e.best.value, e.best));
    m.status = "error";
    m.note = std::string(e.what()) + " (hint: raise --max-nodes)";
    m.certified = false;
  } catch (const Error& e) {
    fill_error(m, e);
  }
  m.wall_ms = ms_since(t0);
  return m;
}

MethodResult run_method_reduce(const Scene& scene, const SceneObject& a,
                               const SceneObject& b, const Options& opt) {
  MethodResult m;
  m.method = "reduce";
  const auto t0 = Clock::now();
  try {
    if (scene.ambient_dim == 3 && a.is_curve() && b.is_curve()) {
      // Winding-number reduction: one curve must lie in {x3 = c}.
      const SceneObject* planar = nullptr;
      const SceneObject* other = nullptr;
      double c0 = 0.0;
      for (const SceneObject* cand : {&a, &b}) {
        PlanarAxis pa = find_planar_axis(*cand, 2);
        if (pa.found && pa.axis == 2) {
          planar = cand;
          other = (cand == &a) ? &b : &a;
          c0 = pa.offset;
          break;
        }
      }
      if (!planar) {
        m.status = "skipped";
        m.note = "not applicable (no component lies in a plane {x3 = c})";
        return m;
      }
      const Isometry shift = Isometry::translation(Vec{0, 0, -c0});
      fill_from(m, reduced_linking_curves(apply_isometry(planar->curve(), shift),
                                          apply_isometry(other->curve(), shift),
                                          opt.tol));
      m.warnings.push_back(
          "assumes the scene is authored in reduced position (homotopy "
          "existence not checked)");
      m.wall_ms = ms_since(t0);
      return m;
    }

    if (scene.ambient_dim == 4 && a.intrinsic_dim() + b.intrinsic_dim() == 3) {
      const SceneObject& mo = (a.intrinsic_dim() == 1) ? a : b;
      const SceneObject& no = (a.intrinsic_dim() == 1) ? b : a;
      const PatchManifold M =
          mo.is_curve() ? PatchManifold::from_curve(mo.curve()) : mo.patch();
      const PatchManifold& N = no.patch();

      std::string attempts;
      for (int k = 0; k < 4; ++k) {
        const double c0 = M.eval(0.0)[k];
        bool flat = true;
        for (int i = 0; i < 512 && flat; ++i)
          flat = std::abs(M.eval(static_cast<double>(i) / 512)[k] - c0) <= 1e-9;
        if (!flat) continue;
        const Isometry shift = Isometry::translation(-c0 * [&] {
          Vec e(4);
          e[k] = 1.0;
          return e;
        }());
        const Hyperplane h = Hyperplane::single(k, 0.0);
        try {
          const PatchManifold Mt = apply_isometry(M, shift);
          const PatchManifold Nt = apply_isometry(N, shift);
          const auto slices = slice_surface(Nt, h, opt.grid);
          LinkingResult r = reduced_linking_general(Mt, slices, h, opt.tol);
          r.quadrature.evaluations +=
              static_cast<long long>(opt.grid) * opt.grid;  // slice mesh
          fill_from(m, r);
          {
            std::ostringstream note;
            note << "sliced by {x" << (k + 1) << " = " << c0 << "}, "
                 << slices.size() << " component(s)";
            m.note = note.str();
          }
          m.warnings.push_back(
              "assumes the scene is authored in reduced position (homotopy "
              "existence not checked)");
          // The reduction is evaluated in (curve, surface) order; when the
          // pair came in as (surface, curve) the degree convention picks up
          // (-1)^{1+mn} = -1 for (m,n) = (2,1), so flip to match.
          if (&mo != &a) {
            m.raw = -m.raw;
            m.rounded = -m.rounded;
          }
          m.wall_ms = ms_since(t0);
          return m;
        } catch (const OpenContour& e) {
          attempts += std::string(attempts.empty() ? "" : "; ") + "x" +
                      std::to_string(k + 1) + ": " + e.what();
        } catch (const NonTransverse& e) {
          attempts += std::string(attempts.empty() ? "" : "; ") + "x" +
                      std::to_string(k + 1) + ": " + e.what();
        }
      }
      m.status = "skipped";
      m.note = attempts.empty()
                   ? "not applicable (no coordinate hyperplane contains the curve)"
                   : "no usable slicing plane (" + attempts + ")";
      return m;
    }

    m.status = "skipped";
    m.note = "not applicable (d=" + std::to_string(scene.ambient_dim) + ")";
    return m;
  } catch (const ToleranceNotReached& e) {
    fill_from(m, make_linking_result(e.best.value, e.best));
    m.status = "error";
    m.note = std::string(e.what()) + " (hint: raise --max-nodes)";
    m.certified = false;
  } catch (const Error& e) {
    fill_error(m, e);
  }
  m.wall_ms = ms_since(t0);
  return m;
}

MethodResult run_method_crossings(const Scene& scene, const SceneObject& a,
                                  const SceneObject& b, const Options& opt) {
  MethodResult m;
  m.method = "crossings";
  if (scene.ambient_dim != 3 || !a.is_curve() || !b.is_curve()) {
    m.status = "skipped";
    m.note = "not applicable (d=" + std::to_string(scene.ambient_dim) +
             ", needs two curves in R^3)";
    return m;
  }
  const auto t0 = Clock::now();
  try {
    constexpr int n = 256;
    Polyline p1, p2;
    p1.vertices.reserve(n);
    p2.vertices.reserve(n);
    for (int i = 0; i < n; ++i) {
      p1.vertices.push_back(a.curve().eval(static_cast<double>(i) / n));
      // Phase offset keeps same-family components from projecting to exactly
      // parallel segment pairs.
      p2.vertices.push_back(b.curve().eval((i + 0.381966) / n));
    }
    std::mt19937_64 rng(opt.seed);
    const int lk = oracles::crossing_sign_linking_auto(p1, p2, rng, 20);
    m.status = "ok";
    m.raw = lk;
    m.rounded = lk;
    m.residual = 0.0;
    m.certified = true;
    m.nodes = {n};
    m.evaluations = static_cast<long long>(n) * n;
  } catch (const Error& e) {
    fill_error(m, e);
  }
  m.wall_ms = ms_since(t0);
  return m;
}

MethodResult run_one_method(const std::string& name, const Scene& scene,
                            const SceneObject& a, const SceneObject& b,
                            const Options& opt) {
  if (name == "gauss") return run_method_gauss(scene, a, b, opt);
  if (name == "degree") return run_method_degree(scene, a, b, opt);
  if (name == "reduce") return run_method_reduce(scene, a, b, opt);
  if (name == "crossings") return run_method_crossings(scene, a, b, opt);
  throw Error("unknown method '" + name + "' (gauss|degree|reduce|crossings|all)");
}

const std::vector<std::string>& all_methods() {
  static const std::vector<std::string> ms = {"gauss", "degree", "reduce",
                                              "crossings"};
  return ms;
}

void finish_pair(PairReport& pr, const Scene& scene) {
  int computed = 0;
  bool fail = false;
  long long first_round = 0;
  for (const auto& r : pr.results) {
    if (r.status == "error") fail = true;
    if (r.status != "ok") continue;
    if (computed == 0) first_round = r.rounded;
    ++computed;
    if (!r.certified || r.rounded != first_round) fail = true;
  }
  if (computed == 0) fail = true;
  pr.agreement = fail ? "FAIL" : "PASS";

  for (const auto& ev : scene.expected) {
    const bool direct = (ev.a == pr.a && ev.b == pr.b);
    const bool swapped = (ev.a == pr.b && ev.b == pr.a);
    if (!direct && !swapped) continue;
    // Swapped matching is only orientation-safe for curve pairs.
    if (swapped && scene.object(ev.a).intrinsic_dim() != scene.object(ev.b).intrinsic_dim())
      continue;
    pr.has_expected = true;
    pr.expected = ev.value;
    const long long want = std::llround(ev.value);
    for (const auto& r : pr.results)
      if (r.status == "ok" && r.rounded != want) pr.expected_ok = false;
    if (computed == 0) pr.expected_ok = false;
  }
}

std::pair<std::string, std::string> parse_pair(const std::string& spec,
                                               const Scene& scene) {
  if (spec.empty()) {
    if (scene.objects.size() < 2) throw Error("scene has fewer than two objects");
    return {scene.objects[0].name, scene.objects[1].name};
  }
  const size_t comma = spec.find(',');
  if (comma == std::string::npos)
    throw Error("--pair expects two comma-separated object names");
  std::string a = spec.substr(0, comma);
  std::string b = spec.substr(comma + 1);
  if (!scene.has_object(a)) throw Error("no object named '" + a + "' in scene");
  if (!scene.has_object(b)) throw Error("no object named '" + b + "' in scene");
  return {a, b};
}

}  // namespace

RunReport run_lk(const std::string& scene_path, const Options& opt) {
  const Scene scene = load_scene(scene_path);
  const auto [an, bn] = parse_pair(opt.pair, scene);

  RunReport report;
  report.scene = scene.name;
  PairReport pr;
  pr.a = an;
  pr.b = bn;

  std::vector<std::string> methods;
  if (opt.method == "all" || opt.method.empty())
    methods = all_methods();
  else
    methods.push_back(opt.method);
  // Validate the method name before running anything.
  for (const auto& name : methods)
    if (name != "gauss" && name != "degree" && name != "reduce" && name != "crossings")
      throw Error("unknown method '" + name + "' (gauss|degree|reduce|crossings|all)");

  const SceneObject& a = scene.object(an);
  const SceneObject& b = scene.object(bn);
  for (const auto& name : methods)
    pr.results.push_back(run_one_method(name, scene, a, b, opt));

  finish_pair(pr, scene);
  report.pairs.push_back(std::move(pr));
  report.exit_code =
      (report.pairs[0].agreement == "PASS" && report.pairs[0].expected_ok) ? 0 : 2;
  return report;
}

VerifyReport run_verify(const std::vector<std::string>& scene_paths,
                        const Options& opt) {
  if (scene_paths.empty()) throw Error("verify: no scene files given");
  VerifyReport vr;
  for (const auto& path : scene_paths) {
    const Scene scene = load_scene(path);
    if (scene.objects.size() < 2) throw Error(scene.name + ": needs >= 2 objects");
    RunReport report;
    report.scene = scene.name;
    for (size_t i = 0; i < scene.objects.size(); ++i) {
      for (size_t j = i + 1; j < scene.objects.size(); ++j) {
        PairReport pr;
        pr.a = scene.objects[i].name;
        pr.b = scene.objects[j].name;
        for (const auto& name : all_methods())
          pr.results.push_back(
              run_one_method(name, scene, scene.objects[i], scene.objects[j], opt));
        finish_pair(pr, scene);
        report.pairs.push_back(std::move(pr));
      }
    }
    for (const auto& pr : report.pairs)
      if (pr.agreement != "PASS" || !pr.expected_ok) report.exit_code = 2;
    vr.exit_code = std::max(vr.exit_code, report.exit_code);
    vr.scenes.push_back(std::move(report));
  }
  return vr;
}

namespace {

std::vector<int> parse_schedule(const std::string& s) {
  std::vector<int> out;
  const size_t dots = s.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(s.substr(0, dots));
    const int hi = std::stoi(s.substr(dots + 2));
    if (lo < 8 || hi < lo) throw Error("bad schedule '" + s + "'");
    for (int n = lo; n <= hi; n *= 2) out.push_back(n);
  } else {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      out.push_back(std::stoi(tok));
    }
    for (size_t i = 0; i < out.size(); ++i) {
      if (out[i] < 8 || (i > 0 && out[i] <= out[i - 1]))
        throw Error("schedule must be ascending with nodes >= 8");
    }
  }
  if (out.empty()) throw Error("empty node schedule");
  if (out.back() > 4096) throw Error("schedule exceeds the 4096 nodes/dim cap");
  return out;
}

}  // namespace

ConvergenceReport run_convergence(const std::string& scene_path,
                                  const std::string& pair,
                                  const std::string& method,
                                  const std::string& schedule,
                                  [[maybe_unused]] const Options& opt) {
  const Scene scene = load_scene(scene_path);
  const auto [an, bn] = parse_pair(pair, scene);
  const SceneObject& a = scene.object(an);
  const SceneObject& b = scene.object(bn);
  const std::vector<int> nodes = parse_schedule(schedule);

  ConvergenceReport cr;
  cr.scene = scene.name;
  cr.a = an;
  cr.b = bn;
  cr.method = method;

  std::function<double(int, long long&)> pass;
  long long extra_first_row_evals = 0;

  if (method == "gauss") {
    if (scene.ambient_dim != 3 || !a.is_curve() || !b.is_curve())
      throw Error("convergence: gauss needs two curves in R^3");
    const ClosedCurve c1 = a.curve(), c2 = b.curve();
    pass = [c1, c2](int n, long long& evals) {
      evals += static_cast<long long>(n) * n;
      return gauss_linking_r3_pass(c1, c2, n);
    };
  } else if (method == "degree") {
    const PatchManifold M =
        a.is_curve() ? PatchManifold::from_curve(a.curve()) : a.patch();
    const PatchManifold N =
        b.is_curve() ? PatchManifold::from_curve(b.curve()) : b.patch();
    if (M.intrinsic_dim + N.intrinsic_dim + 1 != scene.ambient_dim)
      throw Error("convergence: degree not applicable to these dimensions");
    const long long power = (M.intrinsic_dim + N.intrinsic_dim == 3) ? 3 : 2;
    pass = [M, N, power](int n, long long& evals) {
      long long c = 1;
      for (long long i = 0; i < power; ++i) c *= n;
      evals += c;
      return degree_linking_pass(M, N, n);
    };
  } else if (method == "reduce") {
    if (scene.ambient_dim != 3 || !a.is_curve() || !b.is_curve())
      throw Error("convergence: reduce needs two curves in R^3");
    const SceneObject* planar = nullptr;
    const SceneObject* other = nullptr;
    double c0 = 0.0;
    for (const SceneObject* cand : {&a, &b}) {
      PlanarAxis pa = find_planar_axis(*cand, 2);
      if (pa.found && pa.axis == 2) {
        planar = cand;
        other = (cand == &a) ? &b : &a;
        c0 = pa.offset;
        break;
      }
    }
    if (!planar) throw Error("convergence: reduce needs a component in {x3 = c}");
    const Isometry shift = Isometry::translation(Vec{0, 0, -c0});
    const ClosedCurve flat3 = apply_isometry(planar->curve(), shift);
    const ClosedCurve trans = apply_isometry(other->curve(), shift);
    const ClosedCurve flat = ClosedCurve::analytic(
        2,
        [flat3](double t) {
          const Vec p = flat3.eval(t);
          return Vec{p[0], p[1]};
        },
        [flat3](double t) {
          const Vec v = flat3.deriv(t);
          return Vec{v[0], v[1]};
        },
        "projected");
    // The crossings do not depend on the winding node count, so the pipeline
    // finds them once per run; their cost lands on the first row below.
    long long root_evals = 0;
    const auto pts = find_plane_intersections(trans, Hyperplane::single(2, 0.0),
                                              1024, &root_evals);
    extra_first_row_evals = root_evals;
    pass = [flat, pts](int n, long long& evals) {
      double value = 0.0;
      for (const auto& p : pts) {
        value -= p.sign * winding_number_pass(flat, Vec{p.location[0], p.location[1]}, n);
        evals += n;
      }
      return value;
    };
  } else {
    throw Error("convergence supports methods gauss, degree, reduce");
  }

  for (int n : nodes) {
    ConvergenceRow row;
    row.nodes = n;
    const auto t0 = Clock::now();
    long long evals = 0;
    row.value = pass(n, evals);
    row.wall_ms = ms_since(t0);
    row.evaluations = evals + (cr.rows.empty() ? extra_first_row_evals : 0);
    cr.rows.push_back(row);
  }
  {
    long long ignore = 0;
    cr.reference = pass(2 * nodes.back(), ignore);
  }
  for (auto& row : cr.rows)
    row.abs_error_vs_final = std::abs(row.value - cr.reference);
  return cr;
}

GammaReport run_gamma(const std::string& p_range, const std::vector<double>& a_list) {
  std::vector<int> ps;
  const size_t dots = p_range.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(p_range.substr(0, dots));
    const int hi = std::stoi(p_range.substr(dots + 2));
    if (lo < 1 || hi < lo) throw Error("gamma: bad p range '" + p_range + "'");
    for (int p = lo; p <= hi; ++p) ps.push_back(p);
  } else {
    std::stringstream ss(p_range);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      const int p = std::stoi(tok);
      if (p < 1) throw Error("gamma: p must be >= 1");
      ps.push_back(p);
    }
  }
  if (ps.empty()) throw Error("gamma: empty p range");
  if (a_list.empty()) throw Error("gamma: empty a list");
  for (double a : a_list)
    if (a <= 0) throw Error("gamma: a must be positive");

  GammaReport gr;
  for (int p : ps) {
    for (double a : a_list) {
      GammaRow row;
      row.p = p;
      row.a = a;
      row.lhs = oracles::gamma_identity_lhs(p, a);
      row.rhs = oracles::gamma_identity_rhs(p, a).value;
      row.diff = std::abs(row.lhs - row.rhs);
      gr.rows.push_back(row);
    }
  }
  return gr;
}

// -- rendering ------------------------------------------------------------

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string fmt_short(double x) {
  std::ostringstream os;
  os << std::setprecision(2) << std::scientific << x;
  return os.str();
}

std::string nodes_str(const std::vector<int>& nodes) {
  if (nodes.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < nodes.size(); ++i)
    s += (i ? "x" : "") + std::to_string(nodes[i]);
  return s;
}

void render_pair_human(std::ostringstream& os, const PairReport& pr) {
  os << "pair (" << pr.a << ", " << pr.b << ")";
  if (pr.has_expected) os << "   expected " << fmt(pr.expected);
  os << "\n";
  os << "  " << std::left << std::setw(11) << "method" << std::setw(9) << "status"
     << std::setw(21) << "raw" << std::setw(9) << "rounded" << std::setw(11)
     << "residual" << std::setw(13) << "nodes" << std::setw(11) << "evals"
     << "ms\n";
  for (const auto& r : pr.results) {
    os << "  " << std::left << std::setw(11) << r.method << std::setw(9) << r.status;
    if (r.status == "ok" || !r.nodes.empty()) {
      os << std::setw(21) << fmt(r.raw) << std::setw(9) << r.rounded << std::setw(11)
         << fmt_short(r.residual) << std::setw(13) << nodes_str(r.nodes)
         << std::setw(11) << r.evaluations;
    } else {
      os << std::setw(21) << "-" << std::setw(9) << "-" << std::setw(11) << "-"
         << std::setw(13) << "-" << std::setw(11) << "-";
    }
    os << std::fixed << std::setprecision(1) << r.wall_ms << std::defaultfloat
       << "\n";
    if (!r.note.empty()) os << "      note: " << r.note << "\n";
    for (const auto& w : r.warnings) os << "      warning: " << w << "\n";
  }
  os << "  agreement: " << pr.agreement;
  if (pr.has_expected)
    os << (pr.expected_ok ? " (matches expected)" : " (EXPECTED MISMATCH)");
  os << "\n";
}

ordered_json pair_json(const std::string& scene, const PairReport& pr) {
  ordered_json jp;
  jp["scene"] = scene;
  jp["pair"] = {pr.a, pr.b};
  jp["agreement"] = pr.agreement;
  if (pr.has_expected) {
    jp["expected"] = pr.expected;
    jp["expected_ok"] = pr.expected_ok;
  }
  ordered_json results = ordered_json::array();
  for (const auto& r : pr.results) {
    ordered_json jr;
    jr["method"] = r.method;
    jr["status"] = r.status;
    if (r.status == "ok" || !r.nodes.empty()) {
      jr["raw"] = r.raw;
      jr["rounded"] = r.rounded;
      jr["residual"] = r.residual;
      jr["certified"] = r.certified;
      jr["nodes"] = r.nodes;
      jr["evaluations"] = r.evaluations;
    }
    if (!r.note.empty()) jr["note"] = r.note;
    if (!r.warnings.empty()) jr["warnings"] = r.warnings;
    results.push_back(std::move(jr));
  }
  jp["results"] = std::move(results);
  return jp;
}

}  // namespace

std::string render_human(const RunReport& r) {
  std::ostringstream os;
  os << "scene " << r.scene << "\n";
  for (const auto& pr : r.pairs) render_pair_human(os, pr);
  return os.str();
}

std::string render_human(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& s : r.scenes) {
    os << render_human(s);
  }
  os << (r.exit_code == 0 ? "verify: PASS" : "verify: FAIL") << "\n";
  if (r.exit_code != 0) {
    for (const auto& s : r.scenes)
      for (const auto& pr : s.pairs)
        if (pr.agreement != "PASS" || !pr.expected_ok)
          os << "  failing pair: " << s.scene << " (" << pr.a << ", " << pr.b << ")\n";
  }
  return os.str();
}

std::string render_json(const RunReport& r) {
  std::string out;
  for (const auto& pr : r.pairs) out += pair_json(r.scene, pr).dump() + "\n";
  return out;
}

std::string render_json(const VerifyReport& r) {
  std::string out;
  for (const auto& s : r.scenes) out += render_json(s);
  return out;
}

std::string render_human(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "convergence " << r.scene << " (" << r.a << ", " << r.b << ") method "
     << r.method << "\n";
  os << "  " << std::left << std::setw(8) << "nodes" << std::setw(24) << "value"
     << std::setw(16) << "abs_err" << std::setw(12) << "evals" << "ms\n";
  for (const auto& row : r.rows) {
    os << "  " << std::left << std::setw(8) << row.nodes << std::setw(24)
       << fmt(row.value) << std::setw(16) << fmt(row.abs_error_vs_final)
       << std::setw(12) << row.evaluations << std::fixed << std::setprecision(1)
       << row.wall_ms << std::defaultfloat << "\n";
  }
  return os.str();
}

std::string render_json(const ConvergenceReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    ordered_json j;
    j["scene"] = r.scene;
    j["pair"] = {r.a, r.b};
    j["method"] = r.method;
    j["nodes"] = row.nodes;
    j["value"] = row.value;
    j["abs_error_vs_final"] = row.abs_error_vs_final;
    j["evaluations"] = row.evaluations;
    out += j.dump() + "\n";
  }
  return out;
}

std::string render_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "nodes,value,abs_error_vs_final,wall_ms\n";
  for (const auto& row : r.rows) {
    os << row.nodes << "," << std::setprecision(17) << row.value << ","
       << row.abs_error_vs_final << "," << std::setprecision(6) << row.wall_ms
       << "\n";
  }
  return os.str();
}

std::string render_human(const GammaReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "p" << std::setw(8) << "a" << std::setw(24)
     << "lhs (quadrature)" << std::setw(24) << "rhs (closed form)" << "|diff|\n";
  for (const auto& row : r.rows) {
    os << std::left << std::setw(5) << row.p << std::setw(8) << row.a
       << std::setw(24) << fmt(row.lhs) << std::setw(24) << fmt(row.rhs)
       << fmt(row.diff) << "\n";
  }
  return os.str();
}

std::string render_json(const GammaReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    ordered_json j;
    j["p"] = row.p;
    j["a"] = row.a;
    j["lhs"] = row.lhs;
    j["rhs"] = row.rhs;
    j["diff"] = row.diff;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace linkint::cli
