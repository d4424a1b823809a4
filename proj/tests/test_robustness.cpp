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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "robustlab/error.hpp"
#include "robustlab/free_sets.hpp"
#include "robustlab/robustness.hpp"
#include "test_helpers.hpp"

namespace robustlab {
namespace {

const DensityMatrix& mm() {
  static const DensityMatrix m = DensityMatrix::maximally_mixed({2, 2});
  return m;
}

// inf { s : lambda_min((1+s) sigma - rho) >= 0 } by plain bisection with Eigen.
double bisection_min_scaling(const DensityMatrix& rho, const DensityMatrix& sigma) {
  auto feasible = [&](double s) {
    return testing::lambda_min((1.0 + s) * sigma.op() - rho.op()) >= 0.0;
  };
  if (feasible(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (!feasible(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

double middle_abs(double a, double b, double c) {
  std::array<double, 3> v{std::abs(a), std::abs(b), std::abs(c)};
  std::sort(v.begin(), v.end());
  return v[1];
}

TEST(RayRobustness, MemberGivesZero) {
  const RobustnessResult r = robustness_along_ray(mm(), mm(), ppt_oracle());
  EXPECT_EQ(r.value, ExtendedReal::finite(0.0));
  EXPECT_EQ(r.iterations, 0);
}

TEST(RayRobustness, SingletTowardsWhiteNoise) {
  const FreeSetOracle ppt = ppt_oracle();
  const RobustnessResult r = robustness_along_ray(werner(0), mm(), ppt);
  ASSERT_TRUE(r.value.is_finite());
  EXPECT_NEAR(r.value.value(), 2.0, 1e-6);
  ASSERT_TRUE(r.free_witness.has_value());
  EXPECT_TRUE(ppt.member(*r.free_witness));
  EXPECT_LE(*witness_residual(werner(0), r), 1e-8);
  EXPECT_LE(r.bracket_width, 1e-9);
}

TEST(RayRobustness, WitnessConsistencyAndKappaBound) {
  const FreeSetOracle ppt = ppt_oracle();
  const double bound = bound_from_kappa_ball(mm(), *ppt.kappa);
  EXPECT_NEAR(bound, 2 * 0.75 * std::sqrt(12.0) - 1, 1e-12);
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_density(4, 1 + trial % 4, rng, {2, 2});
    const RobustnessResult r = robustness_along_ray(rho, mm(), ppt);
    ASSERT_TRUE(r.value.is_finite());
    EXPECT_LE(r.value.value(), bound + 1e-6);
    EXPECT_LE(*witness_residual(rho, r), 1e-8);
    EXPECT_TRUE(ppt.member(*r.free_witness));
    // faithfulness
    EXPECT_EQ(r.value.value() == 0.0, ppt.member(rho));
  }
}

TEST(RayRobustness, InfeasibleRayIsUnbounded) {
  // Purity never drops below 1/4, so this set is empty.
  FreeSetOracle only_center{"empty", [](const DensityMatrix& r) { return r.purity() < 0.2; }, mm(), {}, ""};
  const RobustnessResult r = robustness_along_ray(werner(0), mm(), only_center);
  EXPECT_TRUE(r.value.is_unbounded());
  EXPECT_FALSE(r.diagnostics.empty());
  EXPECT_FALSE(witness_residual(werner(0), r).has_value());
}

TEST(RayRobustness, NonMonotoneFeasibilityThrows) {
  FreeSetOracle banded{"banded",
                       [](const DensityMatrix& r) {
                         const double p = r.purity();
                         return (p >= 0.4 && p <= 0.5) || p < 0.27;
                       },
                       mm(), {}, ""};
  EXPECT_THROW(robustness_along_ray(werner(0), mm(), banded), StarConvexityError);
}

TEST(RayRobustness, RejectsBadArguments) {
  EXPECT_THROW(robustness_along_ray(mm(), DensityMatrix::maximally_mixed({4}), ppt_oracle()), ValidationError);
  RayOptions bad;
  bad.tol = 0;
  EXPECT_THROW(robustness_along_ray(werner(0), mm(), ppt_oracle(), bad), ValidationError);
}

TEST(MinScaling, Examples) {
  EXPECT_EQ(min_scaling_robustness(mm(), mm()).value(), 0.0);
  EXPECT_NEAR(min_scaling_robustness(bell_states()[0], mm()).value(), 3.0, 1e-12);
  // supp(rho) not inside supp(sigma)
  EXPECT_TRUE(min_scaling_robustness(mm(), bell_states()[0]).is_unbounded());
  EXPECT_NEAR(min_scaling_robustness(bell_states()[0], bell_states()[0]).value(), 0.0, 1e-12);
}

TEST(MinScaling, AgreesWithBisectionOracle) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_density(4, 1 + trial % 4, rng, {2, 2});
    const DensityMatrix sigma = random_density(4, 4, rng, {2, 2});
    const ExtendedReal v = min_scaling_robustness(rho, sigma);
    ASSERT_TRUE(v.is_finite());
    EXPECT_NEAR(v.value(), bisection_min_scaling(rho, sigma), 1e-8);
  }
}

TEST(MinScaling, NoiseOnSigmaRespectsShift) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_density(4, 2, rng, {2, 2});
    const DensityMatrix sigma = random_density(4, 4, rng, {2, 2});
    const double s = min_scaling_robustness(rho, sigma).value();
    for (double eps : {0.01, 0.1, 1.0}) {
      const DensityMatrix noisy = DensityMatrix::mix(1.0 / (1.0 + eps), sigma, mm());
      EXPECT_LE(min_scaling_robustness(rho, noisy).value(), (1 + s) * (1 + eps) - 1 + 1e-9);
    }
  }
}

TEST(DiscordClosedForm, Examples) {
  EXPECT_DOUBLE_EQ(discord_robustness_bds({0.5, 0.3, 0.1}), 0.3);
  for (double c : {-1.0, -0.5, 0.0, 0.7, 1.0}) EXPECT_EQ(discord_robustness_bds({0, 0, c}), 0.0);
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    EXPECT_NEAR(discord_robustness_bds({-(1 - p), -(1 - p), -(1 - p)}), 1 - p, 1e-15);
  }
}

TEST(DiscordClosedForm, PermutationAndSignInvariance) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const BellDiagonalParams c = random_bell_diagonal(rng);
    std::array<double, 3> v = c.as_array();
    const double base = discord_robustness_bds(c);
    EXPECT_EQ(base, middle_abs(v[0], v[1], v[2]));
    // Pairwise max-min form.
    const double a = std::abs(v[0]), b = std::abs(v[1]), d = std::abs(v[2]);
    EXPECT_EQ(base, std::max({std::min(a, b), std::min(a, d), std::min(b, d)}));
    std::sort(v.begin(), v.end());
    do {
      for (int signs = 0; signs < 8; ++signs) {
        const BellDiagonalParams q{signs & 1 ? -v[0] : v[0], signs & 2 ? -v[1] : v[1], signs & 4 ? -v[2] : v[2]};
        EXPECT_EQ(discord_robustness_bds(q), base);
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST(AxisFreeState, Definition) {
  const DensityMatrix s = axis_free_state(3, 0.5);
  EXPECT_LE(max_abs_diff(s.matrix(), bell_diagonal({0, 0, 0.5}).matrix()), 1e-15);
  EXPECT_THROW(axis_free_state(0, 0.5), ValidationError);
  EXPECT_THROW(axis_free_state(1, 1.5), InvalidParametersError);
  EXPECT_TRUE(has_zero_discord(axis_free_state(2, -1.0)));
}

TEST(DiscordAxisOpt, Examples) {
  const AxisOptResult r = discord_robustness_axis_opt({0.5, 0.3, 0.1});
  EXPECT_NEAR(r.result.value.value(), 0.3, 1e-6);
  // The retained axis carries the largest |c_i| (here c1 = 0.5).
  EXPECT_EQ(r.axis, 1);
  const AxisOptResult z = discord_robustness_axis_opt({0, 0, 0});
  EXPECT_EQ(z.result.value.value(), 0.0);
  EXPECT_EQ(z.axis, 1);  // ties go to the lowest axis
  const AxisOptResult s = discord_robustness_axis_opt({0.1, -0.2, 0.6});
  EXPECT_EQ(s.axis, 3);
}

TEST(DiscordAxisOpt, MatchesClosedFormAndCarriesWitnesses) {
  Rng rng(5);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const BellDiagonalParams c = random_bell_diagonal(rng);
    const AxisOptResult r = discord_robustness_axis_opt(c);
    worst = std::max(worst, std::abs(r.result.value.value() - discord_robustness_bds(c)));
    ASSERT_TRUE(r.result.noise_witness && r.result.free_witness);
    EXPECT_LE(*witness_residual(bell_diagonal(c), r.result), 1e-8);
    EXPECT_TRUE(has_zero_discord(*r.result.free_witness));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(DiscordBounds, Examples) {
  const DiscordBounds b = discord_robustness_bounds(bell_diagonal({0.5, -0.3, 0.1}));
  EXPECT_NEAR(b.lo, 0.3, 1e-14);
  EXPECT_NEAR(b.hi, 0.3, 1e-14);

  BlochTwoQubit q;
  q.x = {0.05, 0, 0};
  q.T[0][0] = 0.5;
  q.T[1][1] = 0.3;
  q.T[2][2] = 0.1;
  const DiscordBounds m = discord_robustness_bounds(bloch_compose(q));
  EXPECT_NEAR(m.lo, 0.1, 1e-12);
  EXPECT_NEAR(m.hi, 0.5, 1e-12);
  EXPECT_NEAR(m.marginal, 0.05, 1e-14);

  const DiscordBounds zero = discord_robustness_bounds(mm());
  EXPECT_EQ(zero.lo, 0.0);
  EXPECT_EQ(zero.hi, 0.0);
}

TEST(DiscordBounds, OrderedAndFilteredIdentity) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random_density(4, 1 + trial % 4, rng, {2, 2});
    const DiscordBounds b = discord_robustness_bounds(rho);
    EXPECT_LE(b.lo, b.hi);
    EXPECT_GE(b.lo, 0.0);
    const BlochTwoQubit q = bloch_decompose(rho);
    const double nx = std::hypot(q.x[0], q.x[1], q.x[2]);
    const double ny = std::hypot(q.y[0], q.y[1], q.y[2]);
    EXPECT_NEAR(testing::eigen_trace_norm(rho.op() - filtered_state(rho).op()), std::max(nx, ny), 1e-9);
    EXPECT_NEAR(b.marginal, std::max(nx, ny), 1e-12);
  }
}

TEST(Lipschitz, Constants) {
  const LipschitzConstant kb = lipschitz_from_kappa_ball(mm(), 1.0 / std::sqrt(12.0));
  EXPECT_NEAR(kb.L, std::sqrt(27.0 / 4.0), 1e-12);
  EXPECT_NEAR(kb.L, std::sqrt(std::pow(3.0, 3) / 4.0), 1e-12);
  EXPECT_FALSE(kb.provenance.empty());
  EXPECT_NEAR(lipschitz_full_rank(mm()).L, 4.0, 1e-12);
  EXPECT_THROW(lipschitz_full_rank(bell_states()[0]), InvalidParametersError);
  EXPECT_DOUBLE_EQ(lipschitz_separable(2, 2).L, 1.5);
  EXPECT_DOUBLE_EQ(lipschitz_separable(2, 4).L, 1.5);
  EXPECT_EQ(lipschitz_teleport(2).L, 3.0);
  EXPECT_EQ(teleport_robustness_bound(2), 5.0);
  EXPECT_THROW(lipschitz_from_kappa_ball(mm(), 0.0), InvalidParametersError);
  EXPECT_THROW(lipschitz_teleport(1), InvalidParametersError);
}

TEST(ResultJson, Schema) {
  const RobustnessResult r = robustness_along_ray(werner(0), mm(), ppt_oracle());
  const nlohmann::ordered_json j = result_to_json(r);
  EXPECT_EQ(j["v"], 1);
  EXPECT_TRUE(j["value"].is_number());
  EXPECT_EQ(j["unbounded"], false);
  EXPECT_EQ(j["method"], "ray-bisection:ppt");
  RobustnessResult inf;
  EXPECT_TRUE(result_to_json(inf)["value"].is_null());
  EXPECT_EQ(result_to_json(inf)["unbounded"], true);
}

}  // namespace
}  // namespace robustlab
