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
#include <vector>

#include "json.hpp"
#include "robustlab/audit.hpp"

namespace robustlab::audit {

/// Result of a named audit; `passed` compares the report with `expectation`.
struct AuditOutcome {
  std::string name;
  bool passed = false;
  std::string expectation;
  nlohmann::ordered_json report;
};

std::vector<std::string> audit_names();

/// Sample count used when the caller does not choose one.
std::size_t default_samples(std::string_view name);

/// Throws ConfigurationError for unknown names or samples == 0.
AuditOutcome run_audit(std::string_view name, const AuditConfig& cfg);

nlohmann::ordered_json to_json(const AuditOutcome& o);

/// Measures shared by the presets and the acceptance checks.
double ppt_ray_measure(const DensityMatrix& rho);

/// 1/4 + r H / |H|_Tr for a random traceless H and r uniform in [0, radius].
DensityMatrix random_state_in_ball(Rng& rng, double radius);

}  // namespace robustlab::audit
