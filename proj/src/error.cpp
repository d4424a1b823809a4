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

#include "robustlab/error.hpp"

namespace robustlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kInvalidParameters: return "invalid-parameters";
    case ErrorCode::kIllConditioned: return "ill-conditioned";
    case ErrorCode::kStarConvexityViolation: return "star-convexity-violation";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace robustlab
