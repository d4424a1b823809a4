// Copyright 2026 The robustlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace robustlab {

enum class ErrorCode {
  kValidation,
  kInvalidParameters,
  kIllConditioned,
  kStarConvexityViolation,
  kConfiguration,
  kParse,
};

const char* error_code_name(ErrorCode code);

/// Base class of everything the library throws on bad input or a refused
/// computation. The C API maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input violates a structural invariant (shape, Hermiticity, trace, PSD).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorCode::kValidation, message) {}
};

/// Parameters outside the documented domain (e.g. Bell-diagonal positivity).
class InvalidParametersError : public Error {
 public:
  explicit InvalidParametersError(const std::string& message)
      : Error(ErrorCode::kInvalidParameters, message) {}
};

/// An eigenvalue sits too close to the support cutoff to decide the rank.
class IllConditionedError : public Error {
 public:
  explicit IllConditionedError(const std::string& message)
      : Error(ErrorCode::kIllConditioned, message) {}
};

/// Feasibility along a mixing ray was observed to be non-monotone.
class StarConvexityError : public Error {
 public:
  explicit StarConvexityError(const std::string& message)
      : Error(ErrorCode::kStarConvexityViolation, message) {}
};

class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(const std::string& message)
      : Error(ErrorCode::kConfiguration, message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorCode::kParse, message) {}
};

}  // namespace robustlab
