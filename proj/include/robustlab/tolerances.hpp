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

namespace robustlab {

/// Numerical thresholds shared by every module. Membership decisions near a
/// set boundary depend on these values, so reports echo the ones they used.
struct Tolerances {
  // operator-core
  double hermiticity = 1e-12;
  double jacobi_off_diagonal = 1e-13;
  int jacobi_max_sweeps = 64;
  double support_cutoff = 1e-10;

  // qstates
  double trace = 1e-10;
  double psd = 1e-10;
  double bds_positivity = 1e-12;

  // free sets
  double ppt = 1e-10;
  double discord_defect = 1e-9;
  double unfaithful = 1e-8;
  double bell_diagonal_detection = 1e-10;
  double axis_detection = 1e-9;

  // engines
  double support_leak = 1e-10;
  double witness_consistency = 1e-8;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace robustlab
