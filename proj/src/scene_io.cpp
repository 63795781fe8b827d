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

#include "pseudogeo/scene_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "pseudogeo/error.hpp"

namespace pseudogeo::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

// Full-string strtod; false on trailing garbage or empty input.
bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  const std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && std::isfinite(out);
}

// "<real>" or "<real>/<real>".
bool parse_ratio(std::string_view s, double& out) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_real(s, out);
  double num = 0.0;
  double den = 0.0;
  if (!parse_real(s.substr(0, slash), num) ||
      !parse_real(s.substr(slash + 1), den) || den == 0.0) {
    return false;
  }
  out = num / den;
  return true;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    parse_error(fmt::format("missing key '{}' in {}", key, where));
  }
  return obj.at(key);
}

std::vector<double> real_vector(const json& v, std::size_t n,
                                const std::string& where) {
  if (!v.is_array()) parse_error(fmt::format("{} must be an array", where));
  if (v.size() != n) {
    parse_error(fmt::format("{} has {} entries, expected {}", where, v.size(),
                            n));
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_number()) {
      parse_error(fmt::format("{}[{}] must be a number", where, i));
    }
    const double x = v[i].get<double>();
    if (!std::isfinite(x)) {
      parse_error(fmt::format("{}[{}] is not finite", where, i));
    }
    out.push_back(x);
  }
  return out;
}

std::vector<double> angle_vector(const json& v, std::size_t n,
                                 const std::string& where) {
  if (!v.is_array()) parse_error(fmt::format("{} must be an array", where));
  if (v.size() != n) {
    parse_error(fmt::format("{} has {} entries, expected {}", where, v.size(),
                            n));
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_number()) {
      out.push_back(v[i].get<double>());
    } else if (v[i].is_string()) {
      try {
        out.push_back(parse_angle(v[i].get<std::string>()));
      } catch (const Error& e) {
        parse_error(fmt::format("{}[{}]: {}", where, i, e.what()));
      }
    } else {
      parse_error(fmt::format("{}[{}] must be a number or string", where, i));
    }
  }
  return out;
}

// Coordinates print with 12 significant digits; -0 prints as 0.
std::string num(double x) {
  if (x == 0.0) x = 0.0;
  return fmt::format("{:.12g}", x);
}

std::string_view class_colour(omega::PointTag tag) {
  switch (tag) {
    case omega::PointTag::kElliptic:
      return "#1f77b4";
    case omega::PointTag::kEuclidean:
      return "#7f7f7f";
    case omega::PointTag::kHyperbolic:
      return "#d62728";
  }
  return "#000000";
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  double value = 0.0;
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) {
    if (!parse_ratio(s, value)) {
      parse_error(fmt::format("cannot parse angle '{}'", text));
    }
    return value;
  }

  std::string head = s.substr(0, pi_at);
  const std::string tail = s.substr(pi_at + 2);
  double coefficient = 1.0;
  if (head == "-" || head == "+") {
    coefficient = head == "-" ? -1.0 : 1.0;
  } else if (!head.empty()) {
    if (head.back() == '*') head.pop_back();
    if (!parse_ratio(head, coefficient)) {
      parse_error(fmt::format("cannot parse angle '{}'", text));
    }
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_real(tail.substr(1), divisor) ||
        divisor == 0.0) {
      parse_error(fmt::format("cannot parse angle '{}'", text));
    }
  }
  return coefficient * omega::kPi / divisor;
}

SceneDocument parse_scene(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    parse_error(fmt::format("scene is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) parse_error("scene must be a JSON object");

  const json& jdim = require(doc, "dimension", "scene");
  if (!jdim.is_number_integer() || jdim.get<long long>() < 0) {
    parse_error("dimension must be a nonnegative integer");
  }
  const auto n = jdim.get<std::size_t>();
  if (n < omega::kMinDimension) {
    throw Error(ErrorCode::kDimension,
                fmt::format("dimension must be at least {}, got {}",
                            omega::kMinDimension, n));
  }

  const json& jeps = require(doc, "epsilon", "scene");
  if (!jeps.is_number()) parse_error("epsilon must be a number");

  const json& jbounds = require(doc, "bounds", "scene");
  if (!jbounds.is_array() || jbounds.size() != 2) {
    parse_error("bounds must be [[lower...], [upper...]]");
  }
  geodesics::Bounds bounds{real_vector(jbounds[0], n, "bounds[0]"),
                           real_vector(jbounds[1], n, "bounds[1]")};

  std::vector<geodesics::ChargedPoint> charges;
  if (doc.contains("charges")) {
    const json& jc = doc.at("charges");
    if (!jc.is_array()) parse_error("charges must be an array");
    for (std::size_t k = 0; k < jc.size(); ++k) {
      const std::string where = fmt::format("charges[{}]", k);
      auto position =
          real_vector(require(jc[k], "position", where), n, where + ".position");
      auto raw = angle_vector(require(jc[k], "omega", where), n, where + ".omega");
      charges.push_back({std::move(position), omega::OmegaValue::reduce(raw)});
    }
  } else {
    parse_error("missing key 'charges' in scene");
  }

  std::vector<Ray> rays;
  if (doc.contains("rays")) {
    const json& jr = doc.at("rays");
    if (!jr.is_array()) parse_error("rays must be an array");
    for (std::size_t k = 0; k < jr.size(); ++k) {
      const std::string where = fmt::format("rays[{}]", k);
      auto origin =
          real_vector(require(jr[k], "origin", where), n, where + ".origin");
      auto dir = real_vector(require(jr[k], "direction", where), n,
                             where + ".direction");
      double len = 0.0;
      for (double d : dir) len += d * d;
      len = std::sqrt(len);
      if (len == 0.0) {
        parse_error(fmt::format("{}.direction is the zero vector", where));
      }
      // Leave unit vectors alone so saved scenes reload bit-for-bit.
      if (std::abs(len - 1.0) > 4 * std::numeric_limits<double>::epsilon()) {
        for (double& d : dir) d /= len;
      }
      rays.push_back({std::move(origin), std::move(dir)});
    }
  }

  return SceneDocument{geodesics::Scene(n, std::move(charges),
                                        jeps.get<double>(), std::move(bounds)),
                       std::move(rays)};
}

SceneDocument load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open scene file '{}'", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string scene_to_json(const geodesics::Scene& scene,
                          std::span<const Ray> rays) {
  json doc;
  doc["dimension"] = scene.dimension();
  doc["epsilon"] = scene.epsilon();
  doc["bounds"] = json::array({scene.bounds().lower, scene.bounds().upper});
  json charges = json::array();
  for (const auto& c : scene.charges()) {
    charges.push_back(
        {{"position", c.position},
         {"omega", std::vector<double>(c.omega.per_axis().begin(),
                                       c.omega.per_axis().end())}});
  }
  doc["charges"] = std::move(charges);
  json jrays = json::array();
  for (const auto& r : rays) {
    jrays.push_back({{"origin", r.origin}, {"direction", r.direction}});
  }
  doc["rays"] = std::move(jrays);
  return doc.dump(2) + "\n";
}

std::string emit_csv(std::span<const geodesics::RayTrace> traces,
                     std::size_t dimension) {
  std::string out = "ray_id,segment";
  for (std::size_t i = 1; i <= dimension; ++i) out += fmt::format(",x{}", i);
  for (std::size_t i = 1; i <= dimension; ++i) {
    out += fmt::format(",theta{}", i);
  }
  out += ",event_charge\n";

  for (std::size_t r = 0; r < traces.size(); ++r) {
    const auto& t = traces[r];
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
      out += fmt::format("{},{}", r, v);
      for (double x : t.vertices[v]) out += "," + num(x);
      if (!t.directions.empty()) {
        const auto& d = t.directions[std::min(v, t.directions.size() - 1)];
        for (double c : d) out += "," + num(std::acos(std::clamp(c, -1.0, 1.0)));
      } else {
        for (std::size_t i = 0; i < dimension; ++i) out += ",";
      }
      out += ",";
      for (const auto& e : t.events) {
        if (e.vertex_index == v) {
          out += fmt::format("{}", e.charge_index);
          break;
        }
      }
      out += "\n";
    }
  }
  return out;
}

std::string emit_svg(const geodesics::Scene& scene,
                     std::span<const geodesics::RayTrace> traces) {
  if (scene.dimension() != 2) {
    throw Error(ErrorCode::kUnsupported,
                fmt::format("SVG rendering needs a planar scene, got n = {}; "
                            "use CSV output instead",
                            scene.dimension()));
  }
  const auto& b = scene.bounds();
  const double w = b.upper[0] - b.lower[0];
  const double h = b.upper[1] - b.lower[1];
  const double stroke = 0.003 * std::max(w, h);
  const double radius = std::max(scene.epsilon(), 0.006 * std::max(w, h));
  const double px = 800.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
      num(px), num(px * h / w), num(b.lower[0]), num(-b.upper[1]), num(w),
      num(h));
  out += "<g transform=\"scale(1,-1)\">\n";
  out += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
      "stroke=\"#000000\" stroke-width=\"{}\"/>\n",
      num(b.lower[0]), num(b.lower[1]), num(w), num(h), num(stroke));

  const auto charges = scene.charges();
  for (std::size_t k = 0; k < charges.size(); ++k) {
    const auto tag = omega::classify_component(charges[k].omega[0]);
    out += fmt::format(
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"><title>charge {}: "
        "{}</title></circle>\n",
        num(charges[k].position[0]), num(charges[k].position[1]), num(radius),
        class_colour(tag), k, omega::to_string(tag));
  }
  for (std::size_t r = 0; r < traces.size(); ++r) {
    std::string points;
    for (const auto& v : traces[r].vertices) {
      if (!points.empty()) points += ' ';
      points += num(v[0]) + "," + num(v[1]);
    }
    out += fmt::format(
        "<polyline id=\"ray{}\" points=\"{}\" fill=\"none\" stroke=\"#2ca02c\" "
        "stroke-width=\"{}\"/>\n",
        r, points, num(stroke));
  }
  out += "</g>\n</svg>\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open '{}' for writing", path.string()));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("write to '{}' failed",
                                            path.string()));
  }
}

}  // namespace pseudogeo::io
