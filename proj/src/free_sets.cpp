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

#include "robustlab/free_sets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "robustlab/error.hpp"

namespace robustlab {

double ppt_min_eigenvalue(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.dims().size() != 2) throw ValidationError("is_ppt: bipartite dims required");
  return eig_hermitian(partial_transpose(rho.op(), rho.dims(), 1), tol).min();
}

bool is_ppt(const DensityMatrix& rho, const Tolerances& tol) {
  return ppt_min_eigenvalue(rho, tol) >= -tol.ppt;
}

DiscordDefect discord_defect(const DensityMatrix& rho) {
  require_two_qubit(rho, "discord_defect");
  const BlochTwoQubit b = bloch_decompose(rho);
  // K = y y^T + T^T T lives on B's Bloch space.
  ComplexMatrix k(3, 3);
  double norms = 0.0;
  for (int i = 0; i < 3; ++i) {
    norms += b.y[i] * b.y[i];
    for (int j = 0; j < 3; ++j) {
      norms += b.T[i][j] * b.T[i][j];
      double kij = b.y[i] * b.y[j];
      for (int a = 0; a < 3; ++a) kij += b.T[a][i] * b.T[a][j];
      k(i, j) = kij;
    }
  }
  const double kmax = eig_hermitian(HermitianOperator(std::move(k))).max();
  return {norms - kmax};
}

bool has_zero_discord(const DensityMatrix& rho, const Tolerances& tol) {
  return discord_defect(rho).value <= tol.discord_defect;
}

double gurvits_radius(std::size_t total_dim) {
  const double d = static_cast<double>(total_dim);
  return 1.0 / std::sqrt(d * (d - 1.0));
}

bool gurvits_ball_contains(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.dims().size() != 2) throw ValidationError("gurvits_ball_contains: bipartite dims required");
  const DensityMatrix mm = DensityMatrix::maximally_mixed(rho.dims());
  return trace_norm(rho.op() - mm.op(), tol) <= gurvits_radius(rho.dim());
}

// --- singlet fraction -------------------------------------------------------

double bell_diagonal_singlet_fraction(const BellDiagonalParams& c) {
  const auto w = bell_weights(c);
  return *std::max_element(w.begin(), w.end());
}

namespace {

ComplexMatrix euler_zyz(double a, double b, double g) {
  const Complex i(0.0, 1.0);
  const double cb = std::cos(b / 2);
  const double sb = std::sin(b / 2);
  return ComplexMatrix(2, 2,
                       {std::exp(-i * (a + g) / 2.0) * cb, -std::exp(-i * (a - g) / 2.0) * sb,
                        std::exp(i * (a - g) / 2.0) * sb, std::exp(i * (a + g) / 2.0) * cb});
}

double overlap_objective(const ComplexMatrix& rho, const std::array<double, 6>& t) {
  const ComplexMatrix uv = kron(euler_zyz(t[0], t[1], t[2]), euler_zyz(t[3], t[4], t[5]));
  const double h = 1.0 / std::sqrt(2.0);
  std::array<Complex, 4> psi{};
  for (int r = 0; r < 4; ++r) psi[r] = h * (uv(r, 0) + uv(r, 3));
  Complex s = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s += std::conj(psi[r]) * rho(r, c) * psi[c];
  return s.real();
}

// Maximises f by Nelder-Mead on the negated objective.
template <class F>
double nelder_mead_max(F&& f, std::array<double, 6> start, double step) {
  constexpr int n = 6;
  std::array<std::array<double, 6>, n + 1> simplex{};
  std::array<double, n + 1> val{};
  simplex[0] = start;
  for (int k = 0; k < n; ++k) {
    simplex[k + 1] = start;
    simplex[k + 1][k] += step;
  }
  for (int k = 0; k <= n; ++k) val[k] = -f(simplex[k]);

  for (int iter = 0; iter < 4000; ++iter) {
    std::array<int, n + 1> idx{};
    for (int k = 0; k <= n; ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return val[a] < val[b]; });
    const int best = idx[0];
    const int worst = idx[n];
    const int second = idx[n - 1];
    if (std::abs(val[worst] - val[best]) < 1e-14) break;

    std::array<double, 6> centroid{};
    for (int k = 0; k <= n; ++k)
      if (k != worst)
        for (int d = 0; d < n; ++d) centroid[d] += simplex[k][d] / n;
    auto along = [&](double coef) {
      std::array<double, 6> p{};
      for (int d = 0; d < n; ++d) p[d] = centroid[d] + coef * (simplex[worst][d] - centroid[d]);
      return p;
    };
    const auto xr = along(-1.0);
    const double fr = -f(xr);
    if (fr < val[best]) {
      const auto xe = along(-2.0);
      const double fe = -f(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        val[worst] = fe;
      } else {
        simplex[worst] = xr;
        val[worst] = fr;
      }
    } else if (fr < val[second]) {
      simplex[worst] = xr;
      val[worst] = fr;
    } else {
      const auto xc = fr < val[worst] ? along(-0.5) : along(0.5);
      const double fc = -f(xc);
      if (fc < std::min(fr, val[worst])) {
        simplex[worst] = xc;
        val[worst] = fc;
      } else {
        for (int k = 0; k <= n; ++k) {
          if (k == best) continue;
          for (int d = 0; d < n; ++d)
            simplex[k][d] = simplex[best][d] + 0.5 * (simplex[k][d] - simplex[best][d]);
          val[k] = -f(simplex[k]);
        }
      }
    }
  }
  return -*std::min_element(val.begin(), val.end());
}

}  // namespace

double singlet_fraction(const DensityMatrix& rho, int restarts, std::uint64_t seed) {
  if (rho.dims().size() != 2 || rho.dims()[0] != rho.dims()[1])
    throw ValidationError("singlet_fraction: requires d_A = d_B");
  if (rho.dims()[0] != 2)
    throw ValidationError("singlet_fraction: only d = 2 fits within the supported dimension");
  if (restarts < 1) throw ValidationError("singlet_fraction: restarts must be >= 1");
  const ComplexMatrix& m = rho.matrix();
  auto f = [&](const std::array<double, 6>& t) { return overlap_objective(m, t); };
  double best = -1.0;
  for (int k = 0; k < restarts; ++k) {
    std::array<double, 6> start{};
    if (k > 0) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
      std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
      for (double& a : start) a = u(rng);
    }
    best = std::max(best, nelder_mead_max(f, start, 0.7));
  }
  return best;
}

TeleportabilityCheck check_teleportability(const DensityMatrix& rho, int restarts,
                                           std::uint64_t seed, const Tolerances& tol) {
  TeleportabilityCheck out;
  const double d = rho.dims().empty() ? 0.0 : static_cast<double>(rho.dims()[0]);
  if (const auto c = as_bell_diagonal(rho, tol)) {
    out.f_max = bell_diagonal_singlet_fraction(*c);
    out.exact = true;
    out.method = "bell-basis-exact";
  } else {
    out.f_max = singlet_fraction(rho, restarts, seed);
    out.exact = false;
    out.method = "numeric-lower-bound";
  }
  out.unfaithful = out.f_max <= 1.0 / d + tol.unfaithful;
  return out;
}

bool is_unfaithful(const DensityMatrix& rho, int restarts, std::uint64_t seed,
                   const Tolerances& tol) {
  return check_teleportability(rho, restarts, seed, tol).unfaithful;
}

bool on_bds_axes(const DensityMatrix& rho, const Tolerances& tol) {
  const auto c = as_bell_diagonal(rho, tol);
  if (!c) return false;
  int nonzero = 0;
  for (double v : c->as_array())
    if (std::abs(v) > tol.axis_detection) ++nonzero;
  return nonzero <= 1;
}

// --- oracles ----------------------------------------------------------------

FreeSetOracle ppt_oracle(const Tolerances& tol) {
  FreeSetOracle o;
  o.name = "ppt";
  o.member = [tol](const DensityMatrix& r) { return is_ppt(r, tol); };
  o.star_center = DensityMatrix::maximally_mixed({2, 2});
  o.kappa = gurvits_radius(4);
  o.tolerance_note = "lambda_min(rho^Gamma) >= -" + std::to_string(tol.ppt);
  return o;
}

FreeSetOracle zero_discord_oracle(const Tolerances& tol) {
  FreeSetOracle o;
  o.name = "zero-discord";
  o.member = [tol](const DensityMatrix& r) { return has_zero_discord(r, tol); };
  o.star_center = DensityMatrix::maximally_mixed({2, 2});
  o.tolerance_note = "discord defect <= " + std::to_string(tol.discord_defect);
  return o;
}

FreeSetOracle unfaithful_oracle(int restarts, std::uint64_t seed, const Tolerances& tol) {
  FreeSetOracle o;
  o.name = "unfaithful";
  o.member = [=](const DensityMatrix& r) { return is_unfaithful(r, restarts, seed, tol); };
  o.star_center = DensityMatrix::maximally_mixed({2, 2});
  o.kappa = 0.25;  // (d - 1) / d^2 for d = 2
  o.tolerance_note = "F_max <= 1/d + " + std::to_string(tol.unfaithful) +
                     " (exact for Bell-diagonal input, numeric lower bound otherwise)";
  return o;
}

FreeSetOracle bds_axes_oracle(const Tolerances& tol) {
  FreeSetOracle o;
  o.name = "bds-axes";
  o.member = [tol](const DensityMatrix& r) { return on_bds_axes(r, tol); };
  o.star_center = DensityMatrix::maximally_mixed({2, 2});
  o.tolerance_note = "Bell-diagonal with at most one |c_i| > " + std::to_string(tol.axis_detection);
  return o;
}

FreeSetOracle oracle_by_name(std::string_view name, const Tolerances& tol) {
  if (name == "ppt") return ppt_oracle(tol);
  if (name == "zero-discord") return zero_discord_oracle(tol);
  if (name == "unfaithful") return unfaithful_oracle(8, 1, tol);
  if (name == "bds-axes") return bds_axes_oracle(tol);
  throw ConfigurationError("unknown free set '" + std::string(name) +
                           "' (expected ppt|zero-discord|unfaithful|bds-axes)");
}

// --- star-convexity probe ---------------------------------------------------

StarConvexityReport star_convexity_probe(const FreeSetOracle& oracle, const MemberSampler& sampler,
                                         std::size_t samples, std::size_t mix_points,
                                         std::uint64_t seed) {
  if (!oracle.star_center)
    throw ConfigurationError("star_convexity_probe: oracle '" + oracle.name + "' has no star center");
  StarConvexityReport rep;
  rep.oracle = oracle.name;
  rep.samples = samples;
  rep.center_is_member = oracle.member(*oracle.star_center);
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, s));
    const DensityMatrix sigma = sampler(rng);
    for (std::size_t j = 1; j <= mix_points; ++j) {
      const double delta = static_cast<double>(j) / static_cast<double>(mix_points + 1);
      ++rep.checks;
      if (!oracle.member(DensityMatrix::mix(delta, *oracle.star_center, sigma))) {
        ++rep.violations;
        if (rep.first_violations.size() < 10) rep.first_violations.push_back({s, delta});
      }
    }
  }
  return rep;
}

MemberSampler rejection_member_sampler(const FreeSetOracle& oracle) {
  return [oracle](Rng& rng) {
    std::uniform_int_distribution<std::size_t> rank(1, 4);
    for (int attempt = 0; attempt < 100000; ++attempt) {
      DensityMatrix r = random_density(4, rank(rng), rng, {2, 2});
      if (oracle.member(r)) return r;
    }
    throw ConfigurationError("rejection_member_sampler: no member found for '" + oracle.name + "'");
  };
}

}  // namespace robustlab
