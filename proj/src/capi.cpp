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

#include "pseudogeo/pseudogeo.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "pseudogeo/error.hpp"
#include "pseudogeo/fiber.hpp"
#include "pseudogeo/finsler.hpp"
#include "pseudogeo/geodesics.hpp"
#include "pseudogeo/omega.hpp"
#include "pseudogeo/reports.hpp"
#include "pseudogeo/scene_io.hpp"
#include "pseudogeo/tangent.hpp"

struct pg_report {
  pseudogeo::reports::Report report;
};

struct pg_scene {
  pseudogeo::io::SceneDocument doc;
};

struct pg_traces {
  std::size_t dimension;
  std::vector<pseudogeo::geodesics::RayTrace> traces;
};

namespace {

using pseudogeo::Error;
using pseudogeo::ErrorCode;

thread_local std::string g_last_error;

pg_status fail(pg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
pg_status guarded(Body&& body) noexcept {
  try {
    g_last_error.clear();
    body();
    return PG_OK;
  } catch (const Error& e) {
    return fail(static_cast<pg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PG_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::kInvalidInput, what);
}

std::span<const double> span_of(const double* p, std::size_t n) {
  require(p != nullptr || n == 0, "null array argument");
  return {p, n};
}

char* dup_string(std::string_view s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void emit_report(pseudogeo::reports::Report r, pg_report** out) {
  require(out != nullptr, "null output handle");
  *out = new pg_report{std::move(r)};
}

pseudogeo::omega::PointClass class_with_euclidean_axes(std::size_t n,
                                                       const std::size_t* axes,
                                                       std::size_t s) {
  using pseudogeo::omega::PointTag;
  if (n < pseudogeo::omega::kMinDimension) {
    throw Error(ErrorCode::kDimension,
                fmt::format("dimension must be at least {}",
                            pseudogeo::omega::kMinDimension));
  }
  require(axes != nullptr || s == 0, "null axis list");
  pseudogeo::omega::PointClass pc{std::vector<PointTag>(n, PointTag::kElliptic)};
  for (std::size_t k = 0; k < s; ++k) {
    if (axes[k] < 1 || axes[k] > n) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("euclidean axis {} is outside 1..{}", axes[k], n));
    }
    pc.per_axis[axes[k] - 1] = PointTag::kEuclidean;
  }
  return pc;
}

// "a,b;c,d" -> square matrix.
Eigen::MatrixXd parse_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    std::vector<double> row;
    std::size_t pos = start;
    while (pos <= end) {
      const auto comma = std::min(text.find(',', pos), end);
      row.push_back(pseudogeo::io::parse_angle(text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  const auto k = rows.size();
  Eigen::MatrixXd m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) {
      throw Error(ErrorCode::kParse,
                  fmt::format("matrix row {} has {} entries, expected {}",
                              i + 1, rows[i].size(), k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return m;
}

pseudogeo::finsler::NormCandidate parse_norm(std::string_view spec,
                                             std::size_t m) {
  namespace fn = pseudogeo::finsler;
  if (spec.starts_with("quadratic:")) {
    auto f = fn::quadratic_norm(parse_matrix(spec.substr(10)));
    f.label = std::string(spec);
    return f;
  }
  if (m < 1) throw Error(ErrorCode::kInvalidInput, "vector dimension must be >= 1");
  if (spec == "euclidean") return fn::euclidean_norm(m);
  if (spec == "quartic-mean") return fn::quartic_mean_norm(m);
  if (spec == "linear") return fn::linear_functional(m, 1);
  if (spec.starts_with("linear:")) {
    const double axis = pseudogeo::io::parse_angle(spec.substr(7));
    require(axis >= 1 && axis == static_cast<double>(static_cast<std::size_t>(axis)),
            "linear axis must be a positive integer");
    return fn::linear_functional(m, static_cast<std::size_t>(axis));
  }
  throw Error(ErrorCode::kParse,
              fmt::format("unknown norm '{}' (euclidean | quartic-mean | "
                          "linear[:axis] | quadratic:A)",
                          spec));
}

const pseudogeo::geodesics::RayTrace& trace_at(const pg_traces* t,
                                               std::size_t ray) {
  require(t != nullptr, "null traces handle");
  if (ray >= t->traces.size()) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("ray {} out of range", ray));
  }
  return t->traces[ray];
}

}  // namespace

extern "C" {

const char* pg_version(void) { return "1.0.0"; }

const char* pg_status_name(pg_status status) {
  switch (status) {
    case PG_OK:
      return "ok";
    case PG_ERR_INVALID_INPUT:
      return "invalid input";
    case PG_ERR_DIMENSION:
      return "dimension error";
    case PG_ERR_DEGENERATE_DIRECTION:
      return "degenerate direction";
    case PG_ERR_OUT_OF_BOUNDS:
      return "out of bounds";
    case PG_ERR_COVERAGE:
      return "coverage error";
    case PG_ERR_SINGULARITY:
      return "singularity";
    case PG_ERR_PARSE:
      return "parse error";
    case PG_ERR_VALIDATION:
      return "validation error";
    case PG_ERR_UNSUPPORTED:
      return "unsupported";
    case PG_ERR_IO:
      return "i/o error";
    case PG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* pg_last_error(void) { return g_last_error.c_str(); }

void pg_string_free(char* s) { std::free(s); }

pg_status pg_reduce_omega(const double* raw, size_t n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output array");
    const auto w = pseudogeo::omega::reduce_omega(span_of(raw, n));
    std::copy(w.per_axis().begin(), w.per_axis().end(), out);
  });
}

pg_status pg_classify_point(const double* raw, size_t n, int* tags) {
  return guarded([&] {
    require(tags != nullptr, "null output array");
    const auto pc = pseudogeo::omega::classify_point(
        pseudogeo::omega::reduce_omega(span_of(raw, n)));
    for (std::size_t i = 0; i < n; ++i) {
      switch (pc.per_axis[i]) {
        case pseudogeo::omega::PointTag::kElliptic:
          tags[i] = PG_ELLIPTIC;
          break;
        case pseudogeo::omega::PointTag::kEuclidean:
          tags[i] = PG_EUCLIDEAN;
          break;
        case pseudogeo::omega::PointTag::kHyperbolic:
          tags[i] = PG_HYPERBOLIC;
          break;
      }
    }
  });
}

pg_status pg_transform_direction(const double* theta, const double* omega_raw,
                                 size_t n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output array");
    const auto t = pseudogeo::omega::transform_direction(
        pseudogeo::omega::DirectionAngles::free(span_of(theta, n)),
        pseudogeo::omega::reduce_omega(span_of(omega_raw, n)));
    std::copy(t.per_axis().begin(), t.per_axis().end(), out);
  });
}

pg_status pg_is_identity_mapping(const double* raw, size_t n, int* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = pseudogeo::omega::is_identity_mapping(span_of(raw, n)) ? 1 : 0;
  });
}

pg_status pg_parse_angle(const char* text, double* out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = pseudogeo::io::parse_angle(text);
  });
}

const char* pg_report_text(const pg_report* report) {
  return report != nullptr ? report->report.text.c_str() : "";
}

const char* pg_report_json(const pg_report* report) {
  return report != nullptr ? report->report.json.c_str() : "";
}

int pg_report_ok(const pg_report* report) {
  return report != nullptr && report->report.ok ? 1 : 0;
}

void pg_report_free(pg_report* report) { delete report; }

pg_status pg_classify_report(const double* raw, size_t n, pg_report** out) {
  return guarded([&] {
    emit_report(pseudogeo::reports::classify(
                    pseudogeo::omega::reduce_omega(span_of(raw, n))),
                out);
  });
}

pg_status pg_parallels_report(const double* raw, size_t n, size_t axis,
                              pg_report** out) {
  return guarded([&] {
    const auto w = pseudogeo::omega::reduce_omega(span_of(raw, n));
    if (axis < 1 || axis > n) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("axis {} is outside 1..{}", axis, n));
    }
    emit_report(pseudogeo::reports::parallels(w, axis), out);
  });
}

pg_status pg_tangent_dimension(size_t n, const size_t* euclidean_axes, size_t s,
                               size_t* dim) {
  return guarded([&] {
    require(dim != nullptr, "null output");
    *dim = pseudogeo::tangent::tangent_space(
               class_with_euclidean_axes(n, euclidean_axes, s))
               .dimension();
  });
}

pg_status pg_tangent_report(size_t n, const size_t* euclidean_axes, size_t s,
                            int cotangent, pg_report** out) {
  return guarded([&] {
    const auto pc = class_with_euclidean_axes(n, euclidean_axes, s);
    emit_report(cotangent != 0
                    ? pseudogeo::reports::cotangent(
                          pseudogeo::tangent::cotangent_space(pc))
                    : pseudogeo::reports::tangent(
                          pseudogeo::tangent::tangent_space(pc)),
                out);
  });
}

pg_status pg_fiber_report(long dim_p, long dim_m, long group_dim, long lambda,
                          pg_report** out) {
  return guarded([&] {
    const pseudogeo::fiber::PfbSpec spec{dim_p, dim_m, group_dim, lambda};
    emit_report(
        pseudogeo::reports::fiber(spec, pseudogeo::fiber::validate_pfb(spec)),
        out);
  });
}

pg_status pg_vertical_dimension(long dim_p, long dim_m, long group_dim,
                                long lambda, long* dim_v) {
  return guarded([&] {
    require(dim_v != nullptr, "null output");
    const auto v =
        pseudogeo::fiber::validate_pfb({dim_p, dim_m, group_dim, lambda});
    if (!v.valid) {
      std::string msg;
      for (const auto& e : v.errors) msg += (msg.empty() ? "" : "; ") + e;
      throw Error(ErrorCode::kValidation, msg);
    }
    *dim_v = pseudogeo::fiber::vertical_dimension(*v.valid).vertical;
  });
}

pg_status pg_normcheck_report(const char* norm_spec, size_t m, double tol,
                              pg_report** out) {
  return guarded([&] {
    namespace fn = pseudogeo::finsler;
    require(norm_spec != nullptr, "null norm spec");
    const auto f = parse_norm(norm_spec, m);
    fn::MinkowskiOptions options;
    if (tol > 0.0) options.tol = tol;
    const auto dirs = fn::default_sample_directions(f.dimension);
    const auto norm = fn::check_minkowski_norm(f, dirs, options);
    const auto probe = fn::probe_riemann(f, dirs);
    // A bare vector space: every point euclidean, nothing to deny.
    const pseudogeo::geodesics::DetectionReport euclidean_space;
    emit_report(pseudogeo::reports::normcheck(
                    norm, probe, fn::classify_geometry(euclidean_space, norm,
                                                       probe)),
                out);
  });
}

pg_status pg_kahler_report(const char* metric_spec, size_t n, double tol,
                           pg_report** out) {
  return guarded([&] {
    namespace fn = pseudogeo::finsler;
    require(metric_spec != nullptr, "null metric spec");
    const std::string_view spec(metric_spec);
    fn::MetricField field;
    if (spec == "flat" || spec == "conformal" || spec == "product") {
      require(n >= 1, "complex dimension must be >= 1");
      field = spec == "flat"        ? fn::flat_metric(n)
              : spec == "conformal" ? fn::conformal_metric(n)
                                    : fn::product_metric(n);
    } else {
      Eigen::MatrixXd g = parse_matrix(spec);
      if (g.rows() % 2 != 0) {
        throw Error(ErrorCode::kDimension,
                    fmt::format("metric must be 2n x 2n, got {0}x{0}",
                                g.rows()));
      }
      n = static_cast<std::size_t>(g.rows() / 2);
      field = fn::constant_metric(std::move(g));
    }
    fn::KahlerOptions options;
    if (tol > 0.0) options.tol = tol;
    const fn::Lattice grid{std::vector<double>(2 * n, -1.0),
                           std::vector<double>(2 * n, 1.0), 3};
    emit_report(pseudogeo::reports::kahler(
                    fn::kahler_check(field, n, grid, options)),
                out);
  });
}

pg_status pg_scene_load_file(const char* path, pg_scene** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new pg_scene{pseudogeo::io::load_scene(path)};
  });
}

pg_status pg_scene_parse(const char* json_text, pg_scene** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = new pg_scene{pseudogeo::io::parse_scene(json_text)};
  });
}

void pg_scene_free(pg_scene* scene) { delete scene; }

size_t pg_scene_dimension(const pg_scene* scene) {
  return scene != nullptr ? scene->doc.scene.dimension() : 0;
}

size_t pg_scene_charge_count(const pg_scene* scene) {
  return scene != nullptr ? scene->doc.scene.charges().size() : 0;
}

size_t pg_scene_ray_count(const pg_scene* scene) {
  return scene != nullptr ? scene->doc.rays.size() : 0;
}

pg_status pg_scene_charge_omega(const pg_scene* scene, size_t k, double* out) {
  return guarded([&] {
    require(scene != nullptr && out != nullptr, "null argument");
    const auto charges = scene->doc.scene.charges();
    if (k >= charges.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("charge {} out of range", k));
    }
    const auto w = charges[k].omega.per_axis();
    std::copy(w.begin(), w.end(), out);
  });
}

pg_status pg_scene_to_json(const pg_scene* scene, char** out) {
  return guarded([&] {
    require(scene != nullptr && out != nullptr, "null argument");
    *out = dup_string(
        pseudogeo::io::scene_to_json(scene->doc.scene, scene->doc.rays));
  });
}

pg_status pg_detect_report(const pg_scene* scene, pg_report** out) {
  return guarded([&] {
    require(scene != nullptr, "null scene");
    emit_report(pseudogeo::reports::detection(
                    pseudogeo::geodesics::detect_smarandache(scene->doc.scene)),
                out);
  });
}

pg_status pg_structure_report(const pg_scene* scene, int declared_order,
                              pg_report** out) {
  return guarded([&] {
    namespace geo = pseudogeo::geodesics;
    require(scene != nullptr, "null scene");
    const auto order = declared_order == 0
                           ? geo::SmoothnessOrder::infinite()
                           : geo::SmoothnessOrder::finite(declared_order);
    emit_report(pseudogeo::reports::structure(
                    geo::validate_differential_structure(scene->doc.scene,
                                                         order)),
                out);
  });
}

pg_status pg_scene_trace(const pg_scene* scene, size_t max_events,
                         pg_traces** out) {
  return guarded([&] {
    require(scene != nullptr && out != nullptr, "null argument");
    auto result = std::make_unique<pg_traces>();
    result->dimension = scene->doc.scene.dimension();
    for (std::size_t r = 0; r < scene->doc.rays.size(); ++r) {
      const auto& ray = scene->doc.rays[r];
      try {
        result->traces.push_back(pseudogeo::geodesics::trace_ray(
            scene->doc.scene, ray.origin, ray.direction, max_events));
      } catch (const Error& e) {
        throw Error(e.code(), fmt::format("ray {}: {}", r, e.what()));
      }
    }
    *out = result.release();
  });
}

pg_status pg_scene_trace_ray(const pg_scene* scene, const double* origin,
                             const double* direction, size_t n,
                             size_t max_events, pg_traces** out) {
  return guarded([&] {
    require(scene != nullptr && out != nullptr, "null argument");
    auto result = std::make_unique<pg_traces>();
    result->dimension = scene->doc.scene.dimension();
    result->traces.push_back(pseudogeo::geodesics::trace_ray(
        scene->doc.scene, span_of(origin, n), span_of(direction, n),
        max_events));
    *out = result.release();
  });
}

void pg_traces_free(pg_traces* traces) { delete traces; }

size_t pg_traces_count(const pg_traces* traces) {
  return traces != nullptr ? traces->traces.size() : 0;
}

size_t pg_traces_vertex_count(const pg_traces* traces, size_t ray) {
  if (traces == nullptr || ray >= traces->traces.size()) return 0;
  return traces->traces[ray].vertices.size();
}

pg_status pg_traces_vertex(const pg_traces* traces, size_t ray, size_t vertex,
                           double* out) {
  return guarded([&] {
    require(out != nullptr, "null output array");
    const auto& t = trace_at(traces, ray);
    if (vertex >= t.vertices.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("vertex {} out of range", vertex));
    }
    std::copy(t.vertices[vertex].begin(), t.vertices[vertex].end(), out);
  });
}

size_t pg_traces_event_count(const pg_traces* traces, size_t ray) {
  if (traces == nullptr || ray >= traces->traces.size()) return 0;
  return traces->traces[ray].events.size();
}

pg_status pg_traces_event(const pg_traces* traces, size_t ray, size_t event,
                          size_t* charge, double* incoming, double* outgoing) {
  return guarded([&] {
    const auto& t = trace_at(traces, ray);
    if (event >= t.events.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("event {} out of range", event));
    }
    const auto& e = t.events[event];
    if (charge != nullptr) *charge = e.charge_index;
    if (incoming != nullptr) {
      std::copy(e.incoming.per_axis().begin(), e.incoming.per_axis().end(),
                incoming);
    }
    if (outgoing != nullptr) {
      std::copy(e.outgoing.per_axis().begin(), e.outgoing.per_axis().end(),
                outgoing);
    }
  });
}

pg_status pg_traces_report(const pg_traces* traces, pg_report** out) {
  return guarded([&] {
    require(traces != nullptr, "null traces handle");
    emit_report(pseudogeo::reports::traces(traces->traces), out);
  });
}

pg_status pg_traces_csv(const pg_traces* traces, char** out) {
  return guarded([&] {
    require(traces != nullptr && out != nullptr, "null argument");
    *out = dup_string(
        pseudogeo::io::emit_csv(traces->traces, traces->dimension));
  });
}

pg_status pg_traces_write_csv(const pg_traces* traces, const char* path) {
  return guarded([&] {
    require(traces != nullptr && path != nullptr, "null argument");
    pseudogeo::io::write_text_file(
        path, pseudogeo::io::emit_csv(traces->traces, traces->dimension));
  });
}

pg_status pg_scene_svg(const pg_scene* scene, const pg_traces* traces,
                       char** out) {
  return guarded([&] {
    require(scene != nullptr && out != nullptr, "null argument");
    std::span<const pseudogeo::geodesics::RayTrace> t;
    if (traces != nullptr) t = traces->traces;
    *out = dup_string(pseudogeo::io::emit_svg(scene->doc.scene, t));
  });
}

pg_status pg_scene_write_svg(const pg_scene* scene, const pg_traces* traces,
                             const char* path) {
  return guarded([&] {
    require(scene != nullptr && path != nullptr, "null argument");
    std::span<const pseudogeo::geodesics::RayTrace> t;
    if (traces != nullptr) t = traces->traces;
    pseudogeo::io::write_text_file(path,
                                   pseudogeo::io::emit_svg(scene->doc.scene, t));
  });
}

}  // extern "C"
