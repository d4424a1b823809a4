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

#include "robustlab/audit_presets.hpp"

#include <cmath>

#include "robustlab/error.hpp"
#include "robustlab/geometry2d.hpp"

namespace robustlab::audit {

namespace {

const DensityMatrix& maximally_mixed_qubits() {
  static const DensityMatrix m = DensityMatrix::maximally_mixed({2, 2});
  return m;
}

using Runner = AuditOutcome (*)(const AuditConfig&);

AuditOutcome lipschitz_discord_bds(const AuditConfig& cfg) {
  const LipschitzConstant L = lipschitz_full_rank(maximally_mixed_qubits());
  const LipschitzReport r = audit_lipschitz_states(bds_discord_measure, bell_diagonal_state_pairs(), L, cfg);
  AuditOutcome o{"lipschitz-discord-bds", r.violations == 0, "violations == 0", to_json(r)};
  o.report["tight_constant_1_holds"] = r.max_ratio <= 1.0 + 1e-6;
  return o;
}

AuditOutcome lipschitz_ce1(const AuditConfig& cfg) {
  constexpr double kDelta = 0.2;
  const LipschitzConstant L{1000.0, "finite probe constant"};
  const LipschitzReport r = audit_lipschitz<double>(
      [](const double& t) { return geometry2d::counterexample1_exact(t, kDelta); },
      [](const double& a, const double& b) { return std::abs(a - b); }, counterexample1_pairs(), L, cfg);
  return {"lipschitz-ce1", r.violations > 0, "violations > 0", to_json(r)};
}

AuditOutcome faithfulness_discord_bds(const AuditConfig& cfg) {
  const FreeSetOracle oracle = bds_axes_oracle();
  const FaithfulnessReport r =
      audit_faithfulness<DensityMatrix>(bds_discord_measure, oracle.member, bds_axis_and_generic_points(), cfg);
  return {"faithfulness-discord-bds", r.mismatches == 0, "mismatches == 0", to_json(r)};
}

AuditOutcome faithfulness_ppt_ray(const AuditConfig& cfg) {
  const FreeSetOracle oracle = ppt_oracle();
  const FaithfulnessReport r =
      audit_faithfulness<DensityMatrix>(ppt_ray_measure, oracle.member, mixed_two_qubit_points(), cfg);
  return {"faithfulness-ppt-ray", r.mismatches == 0, "mismatches == 0", to_json(r)};
}

AuditOutcome faithfulness_negative_control(const AuditConfig& cfg) {
  const FreeSetOracle oracle = ppt_oracle();
  const FaithfulnessReport r = audit_faithfulness<DensityMatrix>(
      [](const DensityMatrix& rho) { return trace_distance(rho, maximally_mixed_qubits()); }, oracle.member,
      mixed_two_qubit_points(), cfg);
  return {"faithfulness-negative-control", r.mismatches > 0, "mismatches > 0", to_json(r)};
}

AuditOutcome monotonicity_discord_bds(const AuditConfig& cfg) {
  std::vector<Channel> channels = bell_diagonal_symmetry_channels();
  channels.push_back(depolarizing_channel(0.1));
  channels.push_back(depolarizing_channel(0.5));
  const MonotonicityReport r = audit_monotonicity(bds_discord_measure, channels, bds_axes_oracle(),
                                                  bds_axis_points(), bds_points(), cfg);
  return {"monotonicity-discord-bds", r.violations == 0, "violations == 0", to_json(r)};
}

AuditOutcome convexity_ppt_ray(const AuditConfig& cfg) {
  const ConvexityReport r = audit_convexity_states(ppt_ray_measure, two_qubit_triples(), cfg);
  return {"convexity-ppt-ray", r.violations == 0, "violations == 0", to_json(r)};
}

AuditOutcome convexity_discord_bds(const AuditConfig& cfg) {
  const ConvexityReport r = audit_convexity_states(bds_discord_measure, axis_endpoint_triples(), cfg);
  return {"convexity-discord-bds", r.violations >= 1, "violations >= 1", to_json(r)};
}

AuditOutcome star_convexity_zero_discord(const AuditConfig& cfg) {
  const StarConvexityReport r = star_convexity_probe(
      zero_discord_oracle(), [](Rng& rng) { return random_quantum_classical(rng); }, cfg.samples, 10, cfg.seed);
  return {"star-convexity-zero-discord", r.violations == 0 && r.center_is_member,
          "violations == 0 and center is free", to_json(r)};
}

AuditOutcome gurvits_ppt(const AuditConfig& cfg) {
  const double radius = gurvits_radius(4);
  std::vector<char> ppt(cfg.samples, 0);
  run_indexed(cfg.samples, cfg.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    ppt[i] = is_ppt(random_state_in_ball(rng, radius)) ? 1 : 0;
  });
  std::size_t failures = 0;
  for (char p : ppt) failures += p ? 0 : 1;
  nlohmann::ordered_json rep{{"samples", cfg.samples}, {"radius", radius}, {"failures", failures}};
  return {"gurvits-ppt", failures == 0, "failures == 0", rep};
}

AuditOutcome kappa_bound_ppt(const AuditConfig& cfg) {
  const FreeSetOracle oracle = ppt_oracle();
  const double bound = bound_from_kappa_ball(maximally_mixed_qubits(), *oracle.kappa);
  std::vector<double> values(cfg.samples, 0.0);
  run_indexed(cfg.samples, cfg.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    std::uniform_int_distribution<std::size_t> rank(1, 4);
    values[i] = ppt_ray_measure(random_density(4, rank(rng), rng, {2, 2}));
  });
  std::size_t exceed = 0;
  double max_value = 0.0;
  for (double v : values) {
    if (!(v <= bound + 1e-6)) ++exceed;
    max_value = std::max(max_value, v);
  }
  nlohmann::ordered_json rep{{"samples", cfg.samples}, {"bound", bound}, {"max_value", max_value},
                             {"exceeding", exceed}};
  return {"kappa-bound-ppt", exceed == 0, "no value above the kappa-ball bound", rep};
}

struct Preset {
  const char* name;
  Runner run;
  std::size_t samples;
};

constexpr Preset kPresets[] = {
    {"lipschitz-discord-bds", lipschitz_discord_bds, 10000},
    {"lipschitz-ce1", lipschitz_ce1, 1000},
    {"faithfulness-discord-bds", faithfulness_discord_bds, 1000},
    {"faithfulness-ppt-ray", faithfulness_ppt_ray, 1000},
    {"faithfulness-negative-control", faithfulness_negative_control, 200},
    {"monotonicity-discord-bds", monotonicity_discord_bds, 1000},
    {"convexity-ppt-ray", convexity_ppt_ray, 1000},
    {"convexity-discord-bds", convexity_discord_bds, 200},
    {"star-convexity-zero-discord", star_convexity_zero_discord, 1000},
    {"gurvits-ppt", gurvits_ppt, 1000},
    {"kappa-bound-ppt", kappa_bound_ppt, 200},
};

const Preset& find_preset(std::string_view name) {
  for (const Preset& p : kPresets)
    if (name == p.name) return p;
  throw ConfigurationError("unknown audit '" + std::string(name) + "'");
}

}  // namespace

double ppt_ray_measure(const DensityMatrix& rho) {
  static const FreeSetOracle oracle = ppt_oracle();
  RayOptions opts;
  opts.tol = 1e-11;
  return robustness_along_ray(rho, maximally_mixed_qubits(), oracle, opts).value.as_double();
}

DensityMatrix random_state_in_ball(Rng& rng, double radius) {
  std::uniform_int_distribution<std::size_t> rank(1, 4);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const HermitianOperator h = random_density(4, rank(rng), rng, {2, 2}).op() - maximally_mixed_qubits().op();
  const double n = trace_norm(h);
  const double r = radius * u01(rng);
  HermitianOperator op = maximally_mixed_qubits().op();
  if (n > 0) op += h * (r / n);
  return DensityMatrix(std::move(op), {2, 2});
}

std::vector<std::string> audit_names() {
  std::vector<std::string> out;
  for (const Preset& p : kPresets) out.emplace_back(p.name);
  return out;
}

std::size_t default_samples(std::string_view name) { return find_preset(name).samples; }

AuditOutcome run_audit(std::string_view name, const AuditConfig& cfg) {
  const Preset& p = find_preset(name);
  if (cfg.samples == 0) throw ConfigurationError("audit: samples must be positive");
  AuditOutcome o = p.run(cfg);
  o.report["config"] = {{"samples", cfg.samples}, {"seed", cfg.seed}, {"tolerance", cfg.tolerance}};
  return o;
}

nlohmann::ordered_json to_json(const AuditOutcome& o) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["audit"] = o.name;
  j["passed"] = o.passed;
  j["expectation"] = o.expectation;
  j["report"] = o.report;
  return j;
}

}  // namespace robustlab::audit
