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

#include "robustlab/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "robustlab/error.hpp"
#include "robustlab/state_json.hpp"

namespace robustlab {

std::optional<double> witness_residual(const DensityMatrix& rho, const RobustnessResult& r) {
  if (!r.value.is_finite() || !r.noise_witness || !r.free_witness) return std::nullopt;
  const double s = r.value.value();
  const HermitianOperator mixed = (rho.op() + r.noise_witness->op() * s) * (1.0 / (1.0 + s));
  return max_abs_diff(mixed.matrix(), r.free_witness->matrix());
}

nlohmann::ordered_json result_to_json(const RobustnessResult& r) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  if (r.value.is_finite())
    j["value"] = r.value.value();
  else
    j["value"] = nullptr;
  j["unbounded"] = r.value.is_unbounded();
  j["method"] = r.method;
  j["iterations"] = r.iterations;
  j["bracket_width"] = r.bracket_width;
  j["noise_witness"] = r.noise_witness ? state_to_json(*r.noise_witness) : nlohmann::ordered_json();
  j["free_witness"] = r.free_witness ? state_to_json(*r.free_witness) : nlohmann::ordered_json();
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

// --- ray bisection ----------------------------------------------------------

namespace {

DensityMatrix ray_point(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  return DensityMatrix::mix(1.0 / (1.0 + s), rho, sigma);
}

}  // namespace

RobustnessResult robustness_along_ray(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      const FreeSetOracle& oracle, const RayOptions& opts) {
  if (rho.dims() != sigma.dims())
    throw ValidationError("robustness_along_ray: rho and sigma dims differ");
  if (!(opts.tol > 0)) throw ValidationError("robustness_along_ray: tol must be positive");
  RobustnessResult out;
  out.method = "ray-bisection:" + oracle.name;
  out.noise_witness = sigma;
  if (oracle.member(rho)) {
    out.value = ExtendedReal::finite(0.0);
    out.free_witness = rho;
    return out;
  }
  const double s_max = opts.s_max > 0 ? opts.s_max : 2.0 * static_cast<double>(rho.dim());
  const int scan = std::max(opts.scan_points, 1);

  double lo = 0.0;
  double hi = -1.0;
  for (int k = 1; k <= scan; ++k) {
    const double s = s_max * k / scan;
    const bool feasible = oracle.member(ray_point(rho, sigma, s));
    if (feasible && hi < 0) {
      hi = s;
    } else if (!feasible && hi >= 0) {
      std::ostringstream os;
      os << "robustness_along_ray: feasible at s=" << hi << " but not at s=" << s
         << "; free set '" << oracle.name << "' is not star-convex w.r.t. the noise state";
      throw StarConvexityError(os.str());
    } else if (!feasible) {
      lo = s;
    }
  }
  if (hi < 0) {
    out.value = ExtendedReal::unbounded();
    out.free_witness.reset();
    out.bracket_width = s_max;
    std::ostringstream os;
    os << "infeasible at s_max=" << s_max << "; the ray never reaches the free set";
    out.diagnostics = os.str();
    return out;
  }
  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    if (oracle.member(ray_point(rho, sigma, mid)))
      hi = mid;
    else
      lo = mid;
    ++out.iterations;
  }
  out.value = ExtendedReal::finite(hi);
  out.free_witness = ray_point(rho, sigma, hi);
  out.bracket_width = hi - lo;
  return out;
}

// --- min-scaling form -------------------------------------------------------

ExtendedReal min_scaling_robustness(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    const Tolerances& tol) {
  if (rho.dim() != sigma.dim())
    throw ValidationError("min_scaling_robustness: dimension mismatch");
  const SupportInverseSqrt w = support_inv_sqrt(sigma.op(), tol.support_cutoff, tol);
  const double inside = (w.projector.matrix() * rho.matrix()).trace().real();
  if (1.0 - inside > tol.support_leak) return ExtendedReal::unbounded();
  const HermitianOperator m(w.inv_sqrt.matrix() * rho.matrix() * w.inv_sqrt.matrix());
  return ExtendedReal::finite(std::max(0.0, eig_hermitian(m, tol).max() - 1.0));
}

double discord_robustness_bds(const BellDiagonalParams& c) {
  std::array<double, 3> a{std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)};
  std::sort(a.begin(), a.end());
  return a[1];
}

DensityMatrix axis_free_state(int axis, double k) {
  if (axis < 1 || axis > 3) throw ValidationError("axis_free_state: axis must be 1, 2 or 3");
  if (!(k >= -1.0 && k <= 1.0)) throw InvalidParametersError("axis_free_state: k must lie in [-1,1]");
  BellDiagonalParams c;
  (axis == 1 ? c.c1 : axis == 2 ? c.c2 : c.c3) = k;
  return bell_diagonal(c);
}

namespace {

// Noise state tau with (1 + s) sigma = rho + s tau. Round-off can leave tau
// with eigenvalues of order eps / s below zero, which are clipped.
DensityMatrix noise_from_dominance(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  if (s <= 0.0) return sigma;
  const HermitianOperator t = (sigma.op() * (1.0 + s) - rho.op()) * (1.0 / s);
  const Spectrum sp = eig_hermitian(t);
  double total = 0.0;
  for (double l : sp.eigenvalues) total += std::max(0.0, l);
  const HermitianOperator clipped =
      spectral_map(sp, [&](double l) { return std::max(0.0, l) / total; });
  return DensityMatrix(clipped, rho.dims());
}

}  // namespace

AxisOptResult discord_robustness_axis_opt(const BellDiagonalParams& c, int grid, double tol) {
  if (grid < 3) throw ValidationError("discord_robustness_axis_opt: grid must be >= 3");
  const DensityMatrix rho = bell_diagonal(c);
  // Interior search stays clear of the rank drop at |k| = 1; the endpoints
  // themselves are evaluated exactly.
  constexpr double kLimit = 1.0 - 1e-7;
  auto objective = [&](int axis, double k) {
    return min_scaling_robustness(rho, axis_free_state(axis, k)).as_double();
  };

  AxisOptResult best;
  double best_value = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  for (int axis = 1; axis <= 3; ++axis) {
    double axis_best = std::numeric_limits<double>::infinity();
    double axis_k = 0.0;
    auto consider = [&](double k, double v) {
      ++evaluations;
      if (v < axis_best) {
        axis_best = v;
        axis_k = k;
      }
    };
    consider(-1.0, objective(axis, -1.0));
    consider(1.0, objective(axis, 1.0));
    const double step = 2.0 * kLimit / (grid - 1);
    int best_i = 0;
    double grid_best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
      const double k = -kLimit + step * i;
      const double v = objective(axis, k);
      consider(k, v);
      if (v < grid_best) {
        grid_best = v;
        best_i = i;
      }
    }
    // Golden-section in the cell around the best grid point.
    constexpr double kInvPhi = 0.6180339887498949;
    double a = -kLimit + step * std::max(best_i - 1, 0);
    double b = -kLimit + step * std::min(best_i + 1, grid - 1);
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = objective(axis, x1);
    double f2 = objective(axis, x2);
    consider(x1, f1);
    consider(x2, f2);
    while (b - a > tol) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = objective(axis, x1);
        consider(x1, f1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = objective(axis, x2);
        consider(x2, f2);
      }
    }
    if (axis_best < best_value) {  // strict: ties keep the lower axis
      best_value = axis_best;
      best.axis = axis;
      best.k = axis_k;
      best.result.bracket_width = b - a;
    }
  }

  best.result.method = "axis-opt";
  best.result.iterations = evaluations;
  if (!std::isfinite(best_value)) {
    best.result.value = ExtendedReal::unbounded();
    return best;
  }
  const DensityMatrix sigma = axis_free_state(best.axis, best.k);
  best.result.value = ExtendedReal::finite(best_value);
  best.result.free_witness = sigma;
  best.result.noise_witness = noise_from_dominance(rho, sigma, best_value);
  return best;
}

DiscordBounds discord_robustness_bounds(const DensityMatrix& rho) {
  require_two_qubit(rho, "discord_robustness_bounds");
  const BlochTwoQubit b = bloch_decompose(rho);
  auto norm3 = [](const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); };
  DiscordBounds out;
  out.c2 = singular_values_3x3(b.T)[1];
  out.marginal = std::max(norm3(b.x), norm3(b.y));
  out.lo = std::max(0.0, out.c2 - 4.0 * out.marginal);
  out.hi = out.c2 + 4.0 * out.marginal;
  return out;
}

// --- Lipschitz constants ----------------------------------------------------

namespace {

std::string fmt_param(const char* name, double v) {
  std::ostringstream os;
  os.precision(17);
  os << name << "=" << v;
  return os.str();
}

}  // namespace

LipschitzConstant lipschitz_from_kappa_ball(const DensityMatrix& sigma0, double kappa) {
  if (!(kappa > 0)) throw InvalidParametersError("lipschitz_from_kappa_ball: kappa must be positive");
  const double lmin = eig_hermitian(sigma0.op()).min();
  return {(1.0 - lmin) / kappa,
          "kappa-ball (1-lambda_min)/kappa; " + fmt_param("lambda_min", lmin) + ", " +
              fmt_param("kappa", kappa)};
}

double bound_from_kappa_ball(const DensityMatrix& sigma0, double kappa) {
  if (!(kappa > 0)) throw InvalidParametersError("bound_from_kappa_ball: kappa must be positive");
  const double lmin = eig_hermitian(sigma0.op()).min();
  return 2.0 * (1.0 - lmin) / kappa - 1.0;
}

LipschitzConstant lipschitz_full_rank(const DensityMatrix& sigma0) {
  const double lmin = eig_hermitian(sigma0.op()).min();
  if (!(lmin > kDefaultTolerances.psd))
    throw InvalidParametersError("lipschitz_full_rank: star center is not full rank");
  return {1.0 / lmin, "full-rank star center 1/lambda_min; " + fmt_param("lambda_min", lmin)};
}

LipschitzConstant lipschitz_separable(std::size_t da, std::size_t db) {
  if (da == 0 || db == 0) throw InvalidParametersError("lipschitz_separable: dimensions must be positive");
  return {static_cast<double>(std::min(da, db)) - 0.5,
          "separable absolute robustness min(dA,dB)-1/2; dA=" + std::to_string(da) +
              ", dB=" + std::to_string(db)};
}

LipschitzConstant lipschitz_teleport(std::size_t d) {
  if (d < 2) throw InvalidParametersError("lipschitz_teleport: d must be >= 2");
  return {static_cast<double>(d) + 1.0, "teleportability d+1; d=" + std::to_string(d)};
}

double teleport_robustness_bound(std::size_t d) {
  if (d < 2) throw InvalidParametersError("teleport_robustness_bound: d must be >= 2");
  return 2.0 * static_cast<double>(d) + 1.0;
}

}  // namespace robustlab
