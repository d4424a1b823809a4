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

/* C interface to robustlab. All functions return an rl_status; on failure
 * rl_last_error() describes the problem for the calling thread. Strings and
 * handles returned through out-parameters are owned by the caller and must be
 * released with the matching *_free function. */
#ifndef ROBUSTLAB_H_
#define ROBUSTLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ROBUSTLAB_BUILDING)
#define RL_API __declspec(dllexport)
#else
#define RL_API __declspec(dllimport)
#endif
#else
#define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_ERR_INVALID_ARGUMENT = 1,   /* null pointer, bad enum, unknown option */
  RL_ERR_PARSE = 2,              /* malformed JSON or wrong state shape */
  RL_ERR_VALIDATION = 3,         /* Hermiticity, trace, dimension checks */
  RL_ERR_INVALID_PARAMETERS = 4, /* positivity or parameter range */
  RL_ERR_ILL_CONDITIONED = 5,
  RL_ERR_STAR_CONVEXITY = 6,
  RL_ERR_CONFIGURATION = 7,
  RL_ERR_INTERNAL = 8
} rl_status;

typedef struct rl_state rl_state;
typedef struct rl_result rl_result;

RL_API const char* rl_version(void);
RL_API const char* rl_status_name(rl_status status);
/* Message of the last failed call on this thread; "" if none. */
RL_API const char* rl_last_error(void);
RL_API void rl_string_free(char* s);

/* ---- states ---------------------------------------------------------- */

/* Accepts {"bds":[c1,c2,c3]}, {"bloch":{"x":..,"y":..,"T":..}} or
 * {"dims":[..],"re":[[..]],"im":[[..]]}. */
RL_API rl_status rl_state_parse_json(const char* text, rl_state** out);
RL_API rl_status rl_state_from_bds(double c1, double c2, double c3, rl_state** out);
RL_API rl_status rl_state_maximally_mixed(size_t dim_a, size_t dim_b, rl_state** out);
RL_API rl_status rl_state_to_json(const rl_state* state, char** out);
RL_API size_t rl_state_dim(const rl_state* state);
RL_API void rl_state_free(rl_state* state);

/* ---- results --------------------------------------------------------- */

/* Primary value; *unbounded is set to 1 for +infinity (value is then
 * HUGE_VAL). */
RL_API rl_status rl_result_value(const rl_result* r, double* value, int* unbounded);
/* Numeric top-level field of the result document. */
RL_API rl_status rl_result_get(const rl_result* r, const char* key, double* value);
/* Full result document, {"v":1, ...}. */
RL_API rl_status rl_result_json(const rl_result* r, char** out);
RL_API void rl_result_free(rl_result* r);

/* ---- engines --------------------------------------------------------- */

/* method: "closed-form" or "axis-opt"; the state must be Bell-diagonal. */
RL_API rl_status rl_discord(const rl_state* rho, const char* method, rl_result** out);
RL_API rl_status rl_discord_bounds(const rl_state* rho, rl_result** out);
/* Bisection along the ray towards noise (NULL means maximally mixed);
 * free_set is "ppt", "zero-discord", "unfaithful" or "bds-axes". */
RL_API rl_status rl_ray_robustness(const rl_state* rho, const rl_state* noise, const char* free_set,
                                   double tol, rl_result** out);
RL_API rl_status rl_min_scaling(const rl_state* rho, const rl_state* sigma, rl_result** out);
RL_API rl_status rl_teleport_check(const rl_state* rho, int restarts, uint64_t seed, rl_result** out);

/* ---- planar counterexamples ------------------------------------------ */

typedef struct rl_counterexample_params {
  int id;        /* 1 or 2 */
  double delta;  /* id 1: strip width in (0,1) */
  double a, b;   /* id 2: edge lengths */
  double angle;  /* id 2: angle between the edges in (0, pi) */
  char family;   /* id 2: 'a' or 'b' */
} rl_counterexample_params;

RL_API rl_status rl_counterexample_exact(const rl_counterexample_params* p, double t, double* out);
/* Numeric engine: absolute robustness for id 1, global robustness for id 2.
 * Writes HUGE_VAL and *unbounded = 1 when no decomposition exists. */
RL_API rl_status rl_counterexample_numeric(const rl_counterexample_params* p, double t, int resolution,
                                           double* out, int* unbounded);

/* ---- Lipschitz constants --------------------------------------------- */

RL_API rl_status rl_lipschitz_kappa_ball(const rl_state* sigma0, double kappa, double* L);
RL_API rl_status rl_kappa_ball_bound(const rl_state* sigma0, double kappa, double* bound);
RL_API rl_status rl_lipschitz_full_rank(const rl_state* sigma0, double* L);
RL_API rl_status rl_lipschitz_separable(size_t dim_a, size_t dim_b, double* L);
RL_API rl_status rl_lipschitz_teleport(size_t d, double* L);
RL_API rl_status rl_teleport_bound(size_t d, double* bound);

/* ---- Bell-diagonal tetrahedron --------------------------------------- */

RL_API rl_status rl_bds_valid(double c1, double c2, double c3, int* valid);
/* Middle of |c1|, |c2|, |c3|; fails on invalid parameters. */
RL_API rl_status rl_discord_bds(double c1, double c2, double c3, double* value);

/* ---- audits ---------------------------------------------------------- */

typedef struct rl_audit_config {
  size_t samples;  /* 0 selects the audit's default */
  uint64_t seed;
  double tolerance;
  unsigned threads;
} rl_audit_config;

/* JSON array of audit names. */
RL_API rl_status rl_audit_names(char** out);
RL_API rl_status rl_audit_run(const char* name, const rl_audit_config* cfg, char** report_json,
                              int* passed);

#ifdef __cplusplus
}
#endif

#endif  /* ROBUSTLAB_H_ */
