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

#include <optional>
#include <string>

#include "json.hpp"
#include "robustlab/extended_real.hpp"
#include "robustlab/free_sets.hpp"
#include "robustlab/states.hpp"

namespace robustlab {

/// Outcome of a robustness evaluation. When the value is finite and both
/// witnesses are set, (rho + value * noise) / (1 + value) == free_witness.
struct RobustnessResult {
  ExtendedReal value = ExtendedReal::unbounded();
  std::optional<DensityMatrix> noise_witness;
  std::optional<DensityMatrix> free_witness;
  std::string method;
  int iterations = 0;
  double bracket_width = 0.0;
  std::string diagnostics;
};

/// Max entrywise deviation of (rho + s noise) / (1 + s) from free_witness;
/// nullopt when the result carries no witnesses or an unbounded value.
std::optional<double> witness_residual(const DensityMatrix& rho, const RobustnessResult& r);

nlohmann::ordered_json result_to_json(const RobustnessResult& r);

struct RayOptions {
  /// Upper end of the bracket; <= 0 selects 2 * D.
  double s_max = 0.0;
  double tol = 1e-9;
  /// Coarse feasibility scan used to detect non-monotone rays.
  int scan_points = 16;
};

/// Smallest s with (rho + s sigma) / (1 + s) in the free set, found by
/// bisection along the fixed mixing ray. Upper-bounds the absolute or global
/// robustness; it equals it only when sigma is an optimal noise state.
/// Unbounded (with diagnostics) if infeasible at s_max. Throws
/// StarConvexityError if the coarse scan sees feasibility switch off again.
RobustnessResult robustness_along_ray(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      const FreeSetOracle& oracle, const RayOptions& opts = {});

/// inf { s >= 0 : rho <= (1 + s) sigma } for one fixed sigma:
///   unbounded if supp(rho) is not inside supp(sigma),
///   max(0, lambda_max(P sigma^{-1/2} rho sigma^{-1/2} P) - 1) otherwise.
ExtendedReal min_scaling_robustness(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    const Tolerances& tol = kDefaultTolerances);

/// Closed form for Bell-diagonal states: the middle of |c1|, |c2|, |c3|.
double discord_robustness_bds(const BellDiagonalParams& c);

/// 1/4 (1 + k sigma_a (x) sigma_a), a in {1, 2, 3}, k in [-1, 1].
DensityMatrix axis_free_state(int axis, double k);

struct AxisOptResult {
  RobustnessResult result;
  int axis = 0;     ///< 1-based
  double k = 0.0;
};

/// Minimises min_scaling_robustness(rho_BDS, axis_free_state(a, k)) over the
/// three axes by grid seeding plus golden-section refinement in k. Ties go
/// to the lowest axis index.
AxisOptResult discord_robustness_axis_opt(const BellDiagonalParams& c, int grid = 64,
                                          double tol = 1e-12);

struct DiscordBounds {
  double lo = 0.0;
  double hi = 0.0;
  double c2 = 0.0;         ///< middle singular value of T
  double marginal = 0.0;   ///< max(|x|, |y|)
};

/// |c2| -/+ 4 max(|x|, |y|) with the lower end clipped at 0.
DiscordBounds discord_robustness_bounds(const DensityMatrix& rho);

// --- Lipschitz constants and bounds -----------------------------------------

struct LipschitzConstant {
  double L = 0.0;
  std::string provenance;
};

/// (1 - lambda_min(sigma0)) / kappa.
LipschitzConstant lipschitz_from_kappa_ball(const DensityMatrix& sigma0, double kappa);
/// 2 (1 - lambda_min(sigma0)) / kappa - 1.
double bound_from_kappa_ball(const DensityMatrix& sigma0, double kappa);
/// 1 / lambda_min(sigma0); throws InvalidParametersError unless full rank.
LipschitzConstant lipschitz_full_rank(const DensityMatrix& sigma0);
/// min(dA, dB) - 1/2.
LipschitzConstant lipschitz_separable(std::size_t da, std::size_t db);
/// d + 1.
LipschitzConstant lipschitz_teleport(std::size_t d);
/// 2 d + 1.
double teleport_robustness_bound(std::size_t d);

}  // namespace robustlab
