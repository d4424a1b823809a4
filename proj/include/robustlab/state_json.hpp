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

#include <string>
#include <string_view>

#include "json.hpp"
#include "robustlab/states.hpp"

namespace robustlab {

/// Accepts any of
///   {"dims":[2,2], "re":[[..]], "im":[[..]]}      ("im" optional)
///   {"bloch":{"x":[..], "y":[..], "T":[[..],[..],[..]]}}
///   {"bds":[c1, c2, c3]}
/// Shape problems raise ParseError; Hermiticity and trace problems raise
/// ValidationError; positivity problems raise InvalidParametersError.
DensityMatrix parse_state(std::string_view json_text);
DensityMatrix state_from_json(const nlohmann::json& j);

/// Dense form {"dims", "re", "im"}; doubles are written with round-trip
/// precision, so parse_state(serialize_state(rho)) reproduces rho exactly.
nlohmann::ordered_json state_to_json(const DensityMatrix& rho);
std::string serialize_state(const DensityMatrix& rho);

}  // namespace robustlab
