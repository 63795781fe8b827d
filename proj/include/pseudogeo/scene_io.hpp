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

// Scene files and trace emitters.
//
// A scene file is a JSON document:
//
//   {
//     "dimension": 2,
//     "epsilon": 0.05,
//     "bounds": [[-5, -5], [5, 5]],
//     "charges": [{"position": [0, 0], "omega": ["pi", "2pi"]}],
//     "rays": [{"origin": [-4, 0], "direction": [1, 0]}]
//   }
//
// Angles are numbers in radians or strings with an optional "pi" suffix
// ("1.5pi", "-pi/2", "7/2pi"). Omega values are reduced on load and ray
// directions normalized.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pseudogeo/geodesics.hpp"

namespace pseudogeo::io {

struct Ray {
  geodesics::Position origin;
  geodesics::Position direction;  // unit length
};

struct SceneDocument {
  geodesics::Scene scene;
  std::vector<Ray> rays;
};

/// Parses "<real>", "<real>pi", "pi", "<a>/<b>pi", "<a>pi/<b>" and signed
/// variants. Throws kParse on anything else.
double parse_angle(std::string_view text);

/// Throws kParse for malformed documents (missing key, wrong arity, zero
/// direction) and kValidation/kDimension for scene invariant violations.
SceneDocument parse_scene(std::string_view json_text);
SceneDocument load_scene(const std::filesystem::path& path);

/// Serializes a scene with reduced omega values; parse_scene round-trips it.
std::string scene_to_json(const geodesics::Scene& scene,
                          std::span<const Ray> rays);

/// Header ray_id,segment,x1..xn,theta1..thetan,event_charge, then one row
/// per vertex. theta is the direction angle of the segment leaving the
/// vertex (the last vertex repeats the final segment); event_charge is empty
/// unless a charge fired at the vertex.
std::string emit_csv(std::span<const geodesics::RayTrace> traces,
                     std::size_t dimension);

/// SVG 1.1 rendering of a planar scene: frame, charges coloured by their
/// axis-1 class, traces as polylines. Throws kUnsupported unless n = 2.
std::string emit_svg(const geodesics::Scene& scene,
                     std::span<const geodesics::RayTrace> traces);

/// Writes text verbatim (LF line endings). Throws kIo on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pseudogeo::io
