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

#pragma once

#include <stdexcept>
#include <string>

namespace pseudogeo {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  kInvalidInput = 1,
  kDimension = 2,
  kDegenerateDirection = 3,
  kOutOfBounds = 4,
  kCoverage = 5,
  kSingularity = 6,
  kParse = 7,
  kValidation = 8,
  kUnsupported = 9,
  kIo = 10,
  kInternal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pseudogeo
