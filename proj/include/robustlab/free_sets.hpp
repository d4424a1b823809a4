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

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "robustlab/states.hpp"

namespace robustlab {

/// A free set as seen by the robustness engines: a membership predicate plus
/// optional structural certificates.
struct FreeSetOracle {
  std::string name;
  std::function<bool(const DensityMatrix&)> member;
  /// State w.r.t. which the set is star-convex.
  std::optional<DensityMatrix> star_center;
  /// Radius of a trace-norm ball around star_center contained in the set.
  std::optional<double> kappa;
  /// Human-readable membership rule including its threshold.
  std::string tolerance_note;
};

/// lambda_min(rho^Gamma) on subsystem B.
double ppt_min_eigenvalue(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);
/// True iff lambda_min(rho^Gamma) >= -tol.ppt.
bool is_ppt(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// ||y||^2 + ||T||_F^2 - lambda_max(y y^T + T^T T). Zero exactly on states
/// with vanishing discord on B (quantum-classical states).
struct DiscordDefect {
  double value = 0.0;
};
DiscordDefect discord_defect(const DensityMatrix& rho);
bool has_zero_discord(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// 1 / sqrt(D (D - 1)).
double gurvits_radius(std::size_t total_dim);
/// ||rho - 1/D||_Tr <= gurvits_radius(D).
bool gurvits_ball_contains(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// Bell-basis maximum p_max, exact singlet fraction of a Bell-diagonal state.
double bell_diagonal_singlet_fraction(const BellDiagonalParams& c);

/// Multi-start Nelder-Mead over U = Rz Ry Rz and V = Rz Ry Rz (3 + 3 angles).
/// The result is a lower bound on F_max that never decreases as `restarts`
/// grows for a fixed seed (restart k always uses the same start point).
double singlet_fraction(const DensityMatrix& rho, int restarts = 8, std::uint64_t seed = 1);

struct TeleportabilityCheck {
  double f_max = 0.0;
  bool unfaithful = false;
  /// true: Bell-basis closed form; false: numeric lower bound, so an
  /// "unfaithful" verdict near the threshold is not certified.
  bool exact = false;
  std::string method;
};
TeleportabilityCheck check_teleportability(const DensityMatrix& rho, int restarts = 8,
                                           std::uint64_t seed = 1,
                                           const Tolerances& tol = kDefaultTolerances);
bool is_unfaithful(const DensityMatrix& rho, int restarts = 8, std::uint64_t seed = 1,
                   const Tolerances& tol = kDefaultTolerances);

/// Bell-diagonal and at most one nonzero c_i (the coordinate axes of the
/// tetrahedron). Non-Bell-diagonal inputs are not members.
bool on_bds_axes(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

// --- oracles ----------------------------------------------------------------

FreeSetOracle ppt_oracle(const Tolerances& tol = kDefaultTolerances);
FreeSetOracle zero_discord_oracle(const Tolerances& tol = kDefaultTolerances);
FreeSetOracle unfaithful_oracle(int restarts = 8, std::uint64_t seed = 1,
                                const Tolerances& tol = kDefaultTolerances);
FreeSetOracle bds_axes_oracle(const Tolerances& tol = kDefaultTolerances);

/// "ppt", "zero-discord", "unfaithful", "bds-axes". Throws ConfigurationError
/// on anything else.
FreeSetOracle oracle_by_name(std::string_view name, const Tolerances& tol = kDefaultTolerances);

// --- star-convexity probe ---------------------------------------------------

struct StarConvexityViolation {
  std::size_t sample = 0;
  double weight = 0.0;
};

struct StarConvexityReport {
  std::string oracle;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  bool center_is_member = false;
  std::vector<StarConvexityViolation> first_violations;  ///< at most 10
};

using MemberSampler = std::function<DensityMatrix(Rng&)>;

/// For `samples` members sigma (from `sampler`, seeded per sample) and
/// weights delta_j = j / (mix_points + 1), checks member(delta rho0 +
/// (1 - delta) sigma). Throws ConfigurationError without a star center.
StarConvexityReport star_convexity_probe(const FreeSetOracle& oracle, const MemberSampler& sampler,
                                         std::size_t samples, std::size_t mix_points,
                                         std::uint64_t seed);

/// Rejection sampler: random two-qubit states of random rank until member.
MemberSampler rejection_member_sampler(const FreeSetOracle& oracle);

}  // namespace robustlab
