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

#include "robustlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "json.hpp"
#include "robustlab/audit_presets.hpp"
#include "robustlab/error.hpp"
#include "robustlab/free_sets.hpp"
#include "robustlab/geometry2d.hpp"
#include "robustlab/robustness.hpp"
#include "robustlab/state_json.hpp"
#include "robustlab/states.hpp"

struct rl_state {
  robustlab::DensityMatrix rho;
  /// Parameters the state was built from, kept so closed forms see them exactly.
  std::optional<robustlab::BellDiagonalParams> bds;
};

struct rl_result {
  nlohmann::ordered_json doc;
};

namespace {

using nlohmann::ordered_json;
namespace rl = robustlab;
namespace g2 = robustlab::geometry2d;

thread_local std::string g_last_error;

rl_status fail(rl_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

rl_status status_of(rl::ErrorCode code) {
  switch (code) {
    case rl::ErrorCode::kParse: return RL_ERR_PARSE;
    case rl::ErrorCode::kValidation: return RL_ERR_VALIDATION;
    case rl::ErrorCode::kInvalidParameters: return RL_ERR_INVALID_PARAMETERS;
    case rl::ErrorCode::kIllConditioned: return RL_ERR_ILL_CONDITIONED;
    case rl::ErrorCode::kStarConvexityViolation: return RL_ERR_STAR_CONVEXITY;
    case rl::ErrorCode::kConfiguration: return RL_ERR_CONFIGURATION;
  }
  return RL_ERR_INTERNAL;
}

// Runs fn and converts exceptions into status codes.
template <class F>
rl_status guarded(F&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const rl::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RL_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rl_status emit_state(rl::DensityMatrix rho, rl_state** out,
                     std::optional<rl::BellDiagonalParams> bds = std::nullopt) {
  *out = new rl_state{std::move(rho), bds};
  return RL_OK;
}

rl_status emit_result(ordered_json doc, rl_result** out) {
  *out = new rl_result{std::move(doc)};
  return RL_OK;
}

#define RL_REQUIRE(cond, what) \
  if (!(cond)) return fail(RL_ERR_INVALID_ARGUMENT, what)

g2::PlanarScene scene_for(const rl_counterexample_params& p) {
  return p.id == 1 ? g2::scene_counterexample1(p.delta) : g2::scene_counterexample2(p.a, p.b, p.angle);
}

g2::Ce2Family family_of(char f) { return f == 'b' ? g2::Ce2Family::kB : g2::Ce2Family::kA; }

bool valid_counterexample(const rl_counterexample_params* p) {
  return p != nullptr && (p->id == 1 || (p->id == 2 && (p->family == 'a' || p->family == 'b')));
}

}  // namespace

extern "C" {

const char* rl_version(void) { return "1.0.0"; }

const char* rl_status_name(rl_status status) {
  switch (status) {
    case RL_OK: return "ok";
    case RL_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case RL_ERR_PARSE: return "parse";
    case RL_ERR_VALIDATION: return "validation";
    case RL_ERR_INVALID_PARAMETERS: return "invalid-parameters";
    case RL_ERR_ILL_CONDITIONED: return "ill-conditioned";
    case RL_ERR_STAR_CONVEXITY: return "star-convexity";
    case RL_ERR_CONFIGURATION: return "configuration";
    case RL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* rl_last_error(void) { return g_last_error.c_str(); }

void rl_string_free(char* s) { std::free(s); }

// --- states ----------------------------------------------------------------

rl_status rl_state_parse_json(const char* text, rl_state** out) {
  RL_REQUIRE(text && out, "rl_state_parse_json: null argument");
  return guarded([&] {
    rl::DensityMatrix rho = rl::parse_state(text);
    std::optional<rl::BellDiagonalParams> bds;
    const ordered_json j = ordered_json::parse(text);
    if (j.contains("bds")) {
      const auto c = j["bds"].get<std::vector<double>>();
      bds = rl::BellDiagonalParams{c[0], c[1], c[2]};
    }
    return emit_state(std::move(rho), out, bds);
  });
}

rl_status rl_state_from_bds(double c1, double c2, double c3, rl_state** out) {
  RL_REQUIRE(out, "rl_state_from_bds: null argument");
  return guarded([&] { return emit_state(rl::bell_diagonal({c1, c2, c3}), out, rl::BellDiagonalParams{c1, c2, c3}); });
}

rl_status rl_state_maximally_mixed(size_t dim_a, size_t dim_b, rl_state** out) {
  RL_REQUIRE(out, "rl_state_maximally_mixed: null argument");
  return guarded([&] { return emit_state(rl::DensityMatrix::maximally_mixed({dim_a, dim_b}), out); });
}

rl_status rl_state_to_json(const rl_state* state, char** out) {
  RL_REQUIRE(state && out, "rl_state_to_json: null argument");
  return guarded([&] {
    *out = dup_string(rl::serialize_state(state->rho));
    return RL_OK;
  });
}

size_t rl_state_dim(const rl_state* state) { return state ? state->rho.dim() : 0; }

void rl_state_free(rl_state* state) { delete state; }

// --- results ---------------------------------------------------------------

rl_status rl_result_value(const rl_result* r, double* value, int* unbounded) {
  RL_REQUIRE(r && value, "rl_result_value: null argument");
  const auto it = r->doc.find("value");
  RL_REQUIRE(it != r->doc.end(), "rl_result_value: result has no value");
  const bool inf = it->is_null();
  *value = inf ? HUGE_VAL : it->get<double>();
  if (unbounded) *unbounded = inf ? 1 : 0;
  return RL_OK;
}

rl_status rl_result_get(const rl_result* r, const char* key, double* value) {
  RL_REQUIRE(r && key && value, "rl_result_get: null argument");
  const auto it = r->doc.find(key);
  if (it == r->doc.end() || !(it->is_number() || it->is_boolean()))
    return fail(RL_ERR_INVALID_ARGUMENT, std::string("rl_result_get: no numeric field '") + key + "'");
  *value = it->is_boolean() ? (it->get<bool>() ? 1.0 : 0.0) : it->get<double>();
  return RL_OK;
}

rl_status rl_result_json(const rl_result* r, char** out) {
  RL_REQUIRE(r && out, "rl_result_json: null argument");
  return guarded([&] {
    *out = dup_string(r->doc.dump());
    return RL_OK;
  });
}

void rl_result_free(rl_result* r) { delete r; }

// --- engines ---------------------------------------------------------------

rl_status rl_discord(const rl_state* rho, const char* method, rl_result** out) {
  RL_REQUIRE(rho && method && out, "rl_discord: null argument");
  const std::string m = method;
  RL_REQUIRE(m == "closed-form" || m == "axis-opt", "rl_discord: method must be closed-form or axis-opt");
  return guarded([&] {
    const auto c = rho->bds ? rho->bds : rl::as_bell_diagonal(rho->rho);
    if (!c) throw rl::ValidationError("discord: state is not Bell-diagonal (use discord-bounds)");
    if (m == "closed-form") {
      ordered_json doc;
      doc["v"] = 1;
      doc["value"] = rl::discord_robustness_bds(*c);
      doc["method"] = "closed-form";
      return emit_result(std::move(doc), out);
    }
    const rl::AxisOptResult r = rl::discord_robustness_axis_opt(*c);
    ordered_json doc = rl::result_to_json(r.result);
    doc["axis"] = r.axis;
    doc["k"] = r.k;
    return emit_result(std::move(doc), out);
  });
}

rl_status rl_discord_bounds(const rl_state* rho, rl_result** out) {
  RL_REQUIRE(rho && out, "rl_discord_bounds: null argument");
  return guarded([&] {
    rl::DiscordBounds b = rl::discord_robustness_bounds(rho->rho);
    if (rho->bds) b.lo = b.hi = b.c2 = rl::discord_robustness_bds(*rho->bds);  // exact parameters, no marginals
    ordered_json doc;
    doc["v"] = 1;
    doc["lo"] = b.lo;
    doc["hi"] = b.hi;
    doc["c2"] = b.c2;
    doc["marginal"] = b.marginal;
    doc["method"] = "marginal-bounds";
    return emit_result(std::move(doc), out);
  });
}

rl_status rl_ray_robustness(const rl_state* rho, const rl_state* noise, const char* free_set, double tol,
                            rl_result** out) {
  RL_REQUIRE(rho && free_set && out, "rl_ray_robustness: null argument");
  return guarded([&] {
    const rl::FreeSetOracle oracle = rl::oracle_by_name(free_set);
    const rl::DensityMatrix sigma = noise ? noise->rho : rl::DensityMatrix::maximally_mixed(rho->rho.dims());
    rl::RayOptions opts;
    if (tol > 0) opts.tol = tol;
    ordered_json doc = rl::result_to_json(rl::robustness_along_ray(rho->rho, sigma, oracle, opts));
    doc["free_set"] = oracle.name;
    return emit_result(std::move(doc), out);
  });
}

rl_status rl_min_scaling(const rl_state* rho, const rl_state* sigma, rl_result** out) {
  RL_REQUIRE(rho && sigma && out, "rl_min_scaling: null argument");
  return guarded([&] {
    const rl::ExtendedReal v = rl::min_scaling_robustness(rho->rho, sigma->rho);
    ordered_json doc;
    doc["v"] = 1;
    doc["value"] = v.is_finite() ? ordered_json(v.value()) : ordered_json();
    doc["unbounded"] = v.is_unbounded();
    doc["method"] = "min-scaling";
    return emit_result(std::move(doc), out);
  });
}

rl_status rl_teleport_check(const rl_state* rho, int restarts, uint64_t seed, rl_result** out) {
  RL_REQUIRE(rho && out, "rl_teleport_check: null argument");
  return guarded([&] {
    const rl::TeleportabilityCheck c = rl::check_teleportability(rho->rho, restarts, seed);
    const std::size_t d = rho->rho.dims().front();
    ordered_json doc;
    doc["v"] = 1;
    doc["value"] = c.f_max;
    doc["f_max"] = c.f_max;
    doc["threshold"] = 1.0 / static_cast<double>(d);
    doc["unfaithful"] = c.unfaithful;
    doc["exact"] = c.exact;
    doc["method"] = c.method;
    doc["lipschitz_L"] = rl::lipschitz_teleport(d).L;
    doc["robustness_bound"] = rl::teleport_robustness_bound(d);
    return emit_result(std::move(doc), out);
  });
}

// --- planar counterexamples ------------------------------------------------

rl_status rl_counterexample_exact(const rl_counterexample_params* p, double t, double* out) {
  RL_REQUIRE(valid_counterexample(p) && out, "rl_counterexample_exact: invalid argument");
  return guarded([&] {
    *out = p->id == 1 ? g2::counterexample1_exact(t, p->delta)
                      : g2::counterexample2_exact(family_of(p->family), t, p->a, p->b);
    return RL_OK;
  });
}

rl_status rl_counterexample_numeric(const rl_counterexample_params* p, double t, int resolution, double* out,
                                    int* unbounded) {
  RL_REQUIRE(valid_counterexample(p) && out, "rl_counterexample_numeric: invalid argument");
  RL_REQUIRE(resolution >= 2, "rl_counterexample_numeric: resolution must be >= 2");
  return guarded([&] {
    const g2::PlanarScene scene = scene_for(*p);
    g2::SearchOptions opts;
    opts.resolution = resolution;
    const rl::ExtendedReal v =
        p->id == 1 ? g2::absolute_robustness_2d(g2::counterexample1_point(t), scene, opts)
                   : g2::global_robustness_2d(
                         g2::counterexample2_point(family_of(p->family), t, p->a, p->b, p->angle), scene, opts);
    *out = v.is_finite() ? v.value() : HUGE_VAL;
    if (unbounded) *unbounded = v.is_unbounded() ? 1 : 0;
    return RL_OK;
  });
}

// --- Lipschitz constants ---------------------------------------------------

rl_status rl_lipschitz_kappa_ball(const rl_state* sigma0, double kappa, double* L) {
  RL_REQUIRE(sigma0 && L, "rl_lipschitz_kappa_ball: null argument");
  return guarded([&] {
    *L = rl::lipschitz_from_kappa_ball(sigma0->rho, kappa).L;
    return RL_OK;
  });
}

rl_status rl_kappa_ball_bound(const rl_state* sigma0, double kappa, double* bound) {
  RL_REQUIRE(sigma0 && bound, "rl_kappa_ball_bound: null argument");
  return guarded([&] {
    *bound = rl::bound_from_kappa_ball(sigma0->rho, kappa);
    return RL_OK;
  });
}

rl_status rl_lipschitz_full_rank(const rl_state* sigma0, double* L) {
  RL_REQUIRE(sigma0 && L, "rl_lipschitz_full_rank: null argument");
  return guarded([&] {
    *L = rl::lipschitz_full_rank(sigma0->rho).L;
    return RL_OK;
  });
}

rl_status rl_lipschitz_separable(size_t dim_a, size_t dim_b, double* L) {
  RL_REQUIRE(L, "rl_lipschitz_separable: null argument");
  return guarded([&] {
    *L = rl::lipschitz_separable(dim_a, dim_b).L;
    return RL_OK;
  });
}

rl_status rl_lipschitz_teleport(size_t d, double* L) {
  RL_REQUIRE(L, "rl_lipschitz_teleport: null argument");
  return guarded([&] {
    *L = rl::lipschitz_teleport(d).L;
    return RL_OK;
  });
}

rl_status rl_teleport_bound(size_t d, double* bound) {
  RL_REQUIRE(bound, "rl_teleport_bound: null argument");
  return guarded([&] {
    *bound = rl::teleport_robustness_bound(d);
    return RL_OK;
  });
}

// --- Bell-diagonal tetrahedron ---------------------------------------------

rl_status rl_bds_valid(double c1, double c2, double c3, int* valid) {
  RL_REQUIRE(valid, "rl_bds_valid: null argument");
  return guarded([&] {
    *valid = rl::is_valid_bell_diagonal({c1, c2, c3}) ? 1 : 0;
    return RL_OK;
  });
}

rl_status rl_discord_bds(double c1, double c2, double c3, double* value) {
  RL_REQUIRE(value, "rl_discord_bds: null argument");
  return guarded([&] {
    rl::validate_bell_diagonal({c1, c2, c3});
    *value = rl::discord_robustness_bds({c1, c2, c3});
    return RL_OK;
  });
}

// --- audits ----------------------------------------------------------------

rl_status rl_audit_names(char** out) {
  RL_REQUIRE(out, "rl_audit_names: null argument");
  return guarded([&] {
    *out = dup_string(ordered_json(rl::audit::audit_names()).dump());
    return RL_OK;
  });
}

rl_status rl_audit_run(const char* name, const rl_audit_config* cfg, char** report_json, int* passed) {
  RL_REQUIRE(name && cfg && report_json, "rl_audit_run: null argument");
  return guarded([&] {
    rl::audit::AuditConfig c;
    c.samples = cfg->samples == 0 ? rl::audit::default_samples(name) : cfg->samples;
    c.seed = cfg->seed;
    if (cfg->tolerance > 0) c.tolerance = cfg->tolerance;
    c.threads = cfg->threads == 0 ? 1 : cfg->threads;
    const rl::audit::AuditOutcome o = rl::audit::run_audit(name, c);
    *report_json = dup_string(rl::audit::to_json(o).dump());
    if (passed) *passed = o.passed ? 1 : 0;
    return RL_OK;
  });
}

}  // extern "C"
