// Copyright 2026 The pseudogeo Authors
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

#include "pseudogeo/reports.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

namespace pseudogeo::reports {

namespace {

using nlohmann::json;

std::string point_name(std::size_t id) {
  return id == geodesics::kBackground ? std::string("background")
                                      : fmt::format("charge {}", id);
}

json point_id(std::size_t id) {
  return id == geodesics::kBackground ? json("background") : json(id);
}

Report finish(std::string text, const json& j, bool ok) {
  return {std::move(text), j.dump(2) + "\n", ok};
}

std::vector<std::string> tag_names(const omega::PointClass& pc) {
  std::vector<std::string> out;
  for (auto t : pc.per_axis) out.emplace_back(omega::to_string(t));
  return out;
}

std::vector<double> values(std::span<const double> v) {
  return {v.begin(), v.end()};
}

}  // namespace

Report classify(const omega::OmegaValue& omega) {
  const auto pc = omega::classify_point(omega);
  std::string text;
  for (std::size_t i = 0; i < pc.dimension(); ++i) {
    text += fmt::format("axis {}: omega = {:.12g} -> {}\n", i + 1, omega[i],
                        omega::to_string(pc.per_axis[i]));
  }
  const bool identity = pc.all_euclidean();
  text += fmt::format("identity mapping: {}\n", identity ? "yes" : "no");
  json j{{"omega", values(omega.per_axis())},
         {"classes", tag_names(pc)},
         {"identity", identity}};
  return finish(std::move(text), j, true);
}

Report parallels(const omega::OmegaValue& omega, std::size_t line_axis) {
  const auto pc = omega::classify_point(omega);
  const auto count = geodesics::count_local_parallels(pc, line_axis);
  const auto tag = pc.per_axis[line_axis - 1];
  std::string text = fmt::format(
      "axis {}: {} -> {} locally parallel line(s)\n", line_axis,
      omega::to_string(tag), geodesics::to_string(count));
  json j{{"axis", line_axis},
         {"class", omega::to_string(tag)},
         {"parallels", geodesics::to_string(count)}};
  return finish(std::move(text), j, true);
}

Report detection(const geodesics::DetectionReport& d) {
  std::string text = fmt::format("verdict: {}\n", geodesics::to_string(d.verdict));
  text += fmt::format("parallel axiom denied: {}\n", d.denied ? "yes" : "no");
  text += fmt::format("dimension: {} ({})\n", d.dimension,
                      d.dimension == 3 ? "space geometry"
                                       : "n-dimensional geometry");
  json witnesses = json::array();
  for (const auto& w : d.witnesses) {
    std::string line = fmt::format("witness: {} ({}, {})",
                                   geodesics::to_string(w.rule),
                                   point_name(w.first), point_name(w.second));
    if (w.axis) line += fmt::format(" axis {}", *w.axis);
    text += line + "\n";
    json jw{{"rule", geodesics::to_string(w.rule)},
            {"first", point_id(w.first)},
            {"second", point_id(w.second)}};
    if (w.axis) jw["axis"] = *w.axis;
    witnesses.push_back(std::move(jw));
  }
  json behaviours = json::array();
  for (std::size_t i = 0; i < d.axis_behaviours.size(); ++i) {
    std::vector<std::string> names;
    for (auto c : d.axis_behaviours[i]) names.emplace_back(geodesics::to_string(c));
    text += fmt::format("axis {} parallels: {}\n", i + 1, fmt::join(names, ", "));
    behaviours.push_back(names);
  }
  json j{{"verdict", geodesics::to_string(d.verdict)},
         {"denied", d.denied},
         {"dimension", d.dimension},
         {"witnesses", std::move(witnesses)},
         {"axis_parallels", std::move(behaviours)}};
  return finish(std::move(text), j, true);
}

Report structure(const geodesics::StructureReport& s) {
  const std::string order = s.declared.is_infinite()
                                ? std::string("infinity")
                                : fmt::format("{}", s.declared.order());
  std::string text = fmt::format("verdict: {}\n", s.verdict);
  text += fmt::format("declared smoothness: C^{}\n", order);
  text += "chart condition: declared\n";
  text += "transition smoothness: declared\n";
  text += fmt::format("Smarandache condition: {}\n",
                      s.smarandache ? "holds" : "fails");
  for (const auto& w : s.warnings) text += fmt::format("warning: {}\n", w);
  json j{{"verdict", s.verdict},
         {"declared_smoothness", order},
         {"charts_declared", s.condition_charts_declared},
         {"transitions_declared", s.condition_transitions_declared},
         {"smarandache", s.smarandache},
         {"warnings", s.warnings}};
  return finish(std::move(text), j, s.smarandache);
}

namespace {

template <typename Model, typename Label>
Report space_report(const Model& model, Label label, std::string_view kind) {
  std::vector<std::string> names;
  for (const auto& b : model.basis()) names.push_back(label(b));
  std::string text = fmt::format("n = {}\n", model.n());
  text += fmt::format("euclidean axes: {}\n",
                      model.euclidean_axes().empty()
                          ? std::string("none")
                          : fmt::format("{}", fmt::join(model.euclidean_axes(), ", ")));
  text += fmt::format("dim = {}\n", model.dimension());
  text += fmt::format("basis: {{{}}}\n", fmt::join(names, ", "));
  json j{{"space", kind},
         {"n", model.n()},
         {"euclidean_axes", std::vector<std::size_t>(model.euclidean_axes().begin(),
                                                     model.euclidean_axes().end())},
         {"dimension", model.dimension()},
         {"basis", names}};
  return finish(std::move(text), j, true);
}

}  // namespace

Report tangent(const tangent::TangentSpaceModel& model) {
  return space_report(model, tangent::vector_label, "tangent");
}

Report cotangent(const tangent::CotangentSpaceModel& model) {
  return space_report(model, tangent::covector_label, "cotangent");
}

Report fiber(const fiber::PfbSpec& spec, const fiber::PfbValidation& v) {
  json j{{"dim_p", spec.dim_p},
         {"dim_m", spec.dim_m},
         {"group_dim", spec.group_dim},
         {"lambda", spec.lambda_p},
         {"valid", v.valid.has_value()},
         {"errors", v.errors}};
  std::string text = fmt::format(
      "PFB dim P = {}, dim M = {}, dim G = {}, lambda_P = {}\n", spec.dim_p,
      spec.dim_m, spec.group_dim, spec.lambda_p);
  if (!v.valid) {
    for (const auto& e : v.errors) text += fmt::format("error: {}\n", e);
    return finish(std::move(text), j, false);
  }
  const auto dims = fiber::vertical_dimension(*v.valid);
  const bool euclidean = spec.lambda_p == spec.dim_p;
  const bool classical_vertical = dims.vertical == spec.dim_p - spec.dim_m;
  text += fmt::format("mu = {}, lambda_M = {}\n", v.valid->mu(),
                      v.valid->lambda_m());
  text += fmt::format("dim T_pP = {}\n", dims.total);
  text += fmt::format("dim H_p = {}\n", dims.horizontal);
  text += fmt::format("dim T_pi(p)M = {}\n", dims.horizontal);
  text += fmt::format("dim V_p = {}\n", dims.vertical);
  text += fmt::format("point euclidean: {}; dim V_p {} dim P - dim M\n",
                      euclidean ? "yes" : "no",
                      classical_vertical ? "=" : "!=");
  j["mu"] = v.valid->mu();
  j["lambda_m"] = v.valid->lambda_m();
  j["dim_tp"] = dims.total;
  j["dim_h"] = dims.horizontal;
  j["dim_tm"] = dims.horizontal;
  j["dim_v"] = dims.vertical;
  j["point_euclidean"] = euclidean;
  j["vertical_is_classical"] = classical_vertical;
  return finish(std::move(text), j, true);
}

Report normcheck(const finsler::MinkowskiReport& n,
                 const finsler::RiemannProbe& probe,
                 const finsler::GeometryClass& geometry) {
  auto verdict = [](bool b) { return b ? "pass" : "fail"; };
  std::string text = fmt::format("norm: {} ({} samples)\n", n.label, n.samples);
  text += fmt::format("nonnegativity: {}\n", verdict(n.nonnegative));
  text += fmt::format("homogeneity: {} (max residual {:.3g})\n",
                      verdict(n.homogeneous), n.max_homogeneity_residual);
  text += fmt::format("positive definiteness: {} (min eigenvalue {:.9g})\n",
                      verdict(n.positive_definite), n.min_eigenvalue);
  text += fmt::format("minkowski: {}\n", verdict(n.passed));
  text += fmt::format("riemann probe: {} (max g_y deviation {:.3g})\n",
                      probe.y_independent ? "y-independent" : "y-dependent",
                      probe.max_deviation);
  text += fmt::format("geometry: {}\n", finsler::to_string(geometry.kind));
  json failures = json::array();
  for (const auto& f : n.failures) {
    text += fmt::format("failure: sample {} {}: {}\n", f.sample, f.check,
                        f.detail);
    failures.push_back(
        {{"sample", f.sample}, {"check", f.check}, {"detail", f.detail}});
  }
  json j{{"norm", n.label},
         {"samples", n.samples},
         {"nonnegative", n.nonnegative},
         {"homogeneous", n.homogeneous},
         {"positive_definite", n.positive_definite},
         {"passed", n.passed},
         {"max_homogeneity_residual", n.max_homogeneity_residual},
         {"min_eigenvalue", n.min_eigenvalue},
         {"riemann_y_independent", probe.y_independent},
         {"riemann_max_deviation", probe.max_deviation},
         {"geometry", finsler::to_string(geometry.kind)},
         {"evidence", geometry.evidence},
         {"failures", std::move(failures)}};
  return finish(std::move(text), j, n.passed);
}

Report kahler(const finsler::KahlerReport& k) {
  auto verdict = [](bool b) { return b ? "pass" : "fail"; };
  std::string text =
      fmt::format("complex dimension {} on {} lattice point(s)\n",
                  k.complex_dimension, k.points);
  text += fmt::format("symmetric positive definite: {}\n", verdict(k.symmetric_pd));
  text += fmt::format("J-invariance: {}", verdict(k.j_invariant));
  if (k.j_witness) {
    text += fmt::format(" (witness e{}, e{}: g(JX,JY) = {:.6g}, g(X,Y) = {:.6g})",
                        k.j_witness->first + 1, k.j_witness->second + 1,
                        k.j_witness_rotated, k.j_witness_plain);
  }
  text += "\n";
  text += fmt::format("kappa antisymmetric: {}\n", verdict(k.kappa_antisymmetric));
  text += fmt::format("closedness: {} (max |d kappa| {:.3g}, tol {:.3g})\n",
                      verdict(k.closed), k.max_dkappa, k.closed_tol);
  text += fmt::format("kahler: {}\n", verdict(k.passed));
  json failures = json::array();
  for (const auto& f : k.failures) {
    text += fmt::format("failure: {} at ({:.6g}): {}\n", f.check,
                        fmt::join(f.point, ", "), f.detail);
    failures.push_back({{"check", f.check}, {"point", f.point}, {"detail", f.detail}});
  }
  json j{{"complex_dimension", k.complex_dimension},
         {"points", k.points},
         {"symmetric_pd", k.symmetric_pd},
         {"j_invariant", k.j_invariant},
         {"kappa_antisymmetric", k.kappa_antisymmetric},
         {"closed", k.closed},
         {"passed", k.passed},
         {"max_dkappa", k.max_dkappa},
         {"closed_tol", k.closed_tol},
         {"failures", std::move(failures)}};
  if (k.j_witness) {
    j["j_witness"] = {{"x", fmt::format("e{}", k.j_witness->first + 1)},
                      {"y", fmt::format("e{}", k.j_witness->second + 1)},
                      {"rotated", k.j_witness_rotated},
                      {"plain", k.j_witness_plain}};
  }
  return finish(std::move(text), j, k.passed);
}

Report traces(std::span<const geodesics::RayTrace> traces) {
  std::string text;
  json jt = json::array();
  for (std::size_t r = 0; r < traces.size(); ++r) {
    const auto& t = traces[r];
    text += fmt::format("ray {}: {} segment(s), {} event(s)\n", r,
                        t.segment_count(), t.events.size());
    json events = json::array();
    for (const auto& e : t.events) {
      text += fmt::format("  charge {}: theta ({:.12g}) -> ({:.12g})\n",
                          e.charge_index, fmt::join(e.incoming.per_axis(), ", "),
                          fmt::join(e.outgoing.per_axis(), ", "));
      events.push_back({{"charge", e.charge_index},
                        {"incoming", values(e.incoming.per_axis())},
                        {"outgoing", values(e.outgoing.per_axis())}});
    }
    jt.push_back({{"ray", r},
                  {"segments", t.segment_count()},
                  {"vertices", t.vertices},
                  {"events", std::move(events)}});
  }
  return finish(std::move(text), json{{"traces", std::move(jt)}}, true);
}

}  // namespace pseudogeo::reports
