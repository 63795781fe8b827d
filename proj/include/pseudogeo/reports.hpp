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

// Human-readable and JSON renderings of every report the library produces.

#pragma once

#include <optional>
#include <span>
#include <string>

#include "pseudogeo/fiber.hpp"
#include "pseudogeo/finsler.hpp"
#include "pseudogeo/geodesics.hpp"
#include "pseudogeo/omega.hpp"
#include "pseudogeo/tangent.hpp"

namespace pseudogeo::reports {

struct Report {
  std::string text;  // LF-terminated lines
  std::string json;  // single JSON document, LF-terminated
  /// False when the report records a failed validation or check.
  bool ok = true;
};

Report classify(const omega::OmegaValue& omega);
Report parallels(const omega::OmegaValue& omega, std::size_t line_axis);
Report detection(const geodesics::DetectionReport& detection);
Report structure(const geodesics::StructureReport& structure);
Report tangent(const tangent::TangentSpaceModel& model);
Report cotangent(const tangent::CotangentSpaceModel& model);
Report fiber(const fiber::PfbSpec& spec, const fiber::PfbValidation& validation);
Report normcheck(const finsler::MinkowskiReport& norm,
                 const finsler::RiemannProbe& probe,
                 const finsler::GeometryClass& geometry);
Report kahler(const finsler::KahlerReport& kahler);
Report traces(std::span<const geodesics::RayTrace> traces);

}  // namespace pseudogeo::reports
