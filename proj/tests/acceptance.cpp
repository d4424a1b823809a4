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

// Acceptance suite: one PASS/FAIL line per criterion. With --criterion N only
// that criterion runs; the exit status is nonzero if any selected one fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "robustlab/audit.hpp"
#include "robustlab/audit_presets.hpp"
#include "robustlab/free_sets.hpp"
#include "robustlab/geometry2d.hpp"
#include "robustlab/robustness.hpp"
#include "robustlab/states.hpp"
#include "test_helpers.hpp"

namespace {

using namespace robustlab;
namespace g2 = robustlab::geometry2d;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "FAILED " << what;
    }
  }
  void info(const std::string& s) { detail << (detail.tellp() > 0 ? "; " : "") << s; }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double middle_abs(const BellDiagonalParams& c) {
  std::array<double, 3> a{std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)};
  std::sort(a.begin(), a.end());
  return a[1];
}

constexpr std::uint64_t kSeed = 20260101;

// 1. closed form vs axis optimisation on 500 random Bell-diagonal states.
void criterion1(Verdict& v) {
  const auto t0 = Clock::now();
  double worst_cf = 0, worst_opt = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const BellDiagonalParams c = random_bell_diagonal(derive_seed(kSeed + 1, i));
    const double cf = discord_robustness_bds(c);
    worst_cf = std::max(worst_cf, std::abs(cf - middle_abs(c)));
    worst_opt = std::max(worst_opt, std::abs(discord_robustness_axis_opt(c).result.value.as_double() - cf));
  }
  const double secs = seconds_since(t0);
  v.require(worst_cf == 0.0, "closed form equals middle |c_i|");
  v.require(worst_opt <= 1e-6, "axis-opt within 1e-6");
  v.require(secs < 10.0, "runtime < 10 s");
  v.info("max |cf - mid| = " + num(worst_cf) + ", max |opt - cf| = " + num(worst_opt) + ", " + num(secs) + " s");
}

// 2. Werner family through the state path: R = 1 - p.
void criterion2(Verdict& v) {
  double worst = 0;
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const auto c = as_bell_diagonal(werner(p));
    v.require(c.has_value(), "werner(" + num(p) + ") detected as Bell-diagonal");
    if (!c) continue;
    worst = std::max(worst, std::abs(discord_robustness_bds(*c) - (1 - p)));
    worst = std::max(worst, std::abs(discord_robustness_axis_opt(*c).result.value.as_double() - (1 - p)));
  }
  v.require(worst <= 1e-6, "both methods within 1e-6 of 1-p");
  v.info("max error " + num(worst) + " over p = 0, 0.1, ..., 1");
}

// 3. Counterexample 1, numeric engine, delta = 0.2.
void criterion3(Verdict& v) {
  const g2::PlanarScene s = g2::scene_counterexample1(0.2);
  const auto R = [&](double t) { return g2::absolute_robustness_2d(g2::counterexample1_point(t), s).as_double(); };
  const double left = R(-0.5), right = R(0.5);
  const double jump = std::abs(R(-1e-3) - R(1e-3));
  v.require(std::abs(left - 4.0) <= 1e-3, "R(-0.5) = 4 within 1e-3");
  v.require(std::abs(right - 0.5) <= 1e-3, "R(0.5) = 0.5 within 1e-3");
  v.require(jump > 3.9, "jump at eps = 1e-3 exceeds 3.9");
  v.info("R(-0.5) = " + num(left) + ", R(0.5) = " + num(right) + ", jump = " + num(jump));
}

// 4. Counterexample 2, global engine, a = b = 1, right angle.
void criterion4(Verdict& v) {
  const double angle = std::acos(-1.0) / 2;
  const g2::PlanarScene s = g2::scene_counterexample2(1, 1, angle);
  const g2::Point2D pa = g2::counterexample2_point(g2::Ce2Family::kA, 0.5, 1, 1, angle);
  const g2::Point2D pb = g2::counterexample2_point(g2::Ce2Family::kB, 2.0 / 3.0, 1, 1, angle);
  const double Ra = g2::global_robustness_2d(pa, s).as_double();
  const double Rb = g2::global_robustness_2d(pb, s).as_double();
  v.require(std::abs(Ra - 1.0) <= 1e-3, "R[rho_a(1/2)] = 1 within 1e-3");
  v.require(std::abs(Rb - 2.0) <= 1e-3, "R[rho_b(2/3)] = 2 within 1e-3");
  Rng rng(kSeed + 4);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  int unbounded = 0;
  for (int i = 0; i < 10; ++i) {
    double l1, l2;
    do {
      l1 = u(rng);
      l2 = u(rng);
    } while (l1 + l2 >= 0.98);
    unbounded += g2::global_robustness_2d({l1, l2}, s).is_unbounded();
  }
  v.require(unbounded == 10, "+inf at 10 interior points");
  v.info("R[rho_a(1/2)] = " + num(Ra) + ", R[rho_b(2/3)] = " + num(Rb) + ", interior unbounded " +
         std::to_string(unbounded) + "/10");
  const double gap = std::hypot(pa.x - pb.x, pa.y - pb.y);
  const double near_b = g2::global_robustness_2d(
      g2::counterexample2_point(g2::Ce2Family::kB, 2.0 / 3.0 - 1e-6, 1, 1, angle), s).as_double();
  v.notes.push_back("rho_a(1/2) and rho_b(2/3) are the same point (separation " + num(gap) +
                    "), so one function cannot return both 1 and 2 there.");
  v.notes.push_back("the value at the shared corner is the smaller branch, 1; along family b the limit is " +
                    num(near_b) + " at t = 2/3 - 1e-6, so 2 is a one-sided limit, not a value.");
}

// 5. Lipschitz audit of the discord closed form with L = 4.
void criterion5(Verdict& v) {
  const auto t0 = Clock::now();
  const LipschitzConstant L = lipschitz_full_rank(DensityMatrix::maximally_mixed({2, 2}));
  audit::AuditConfig cfg;
  cfg.samples = 10000;
  cfg.seed = kSeed + 5;
  cfg.threads = audit::threads_from_env();
  const audit::LipschitzReport r =
      audit::audit_lipschitz_states(audit::bds_discord_measure, audit::bell_diagonal_state_pairs(), L, cfg);
  const double secs = seconds_since(t0);
  v.require(L.L == 4.0, "L = 4");
  v.require(r.pairs_tested == 10000, "10^4 pairs tested");
  v.require(r.violations == 0, "0 violations");
  v.require(secs < 30.0, "runtime < 30 s");
  v.info("violations " + std::to_string(r.violations) + ", max_ratio " + num(r.max_ratio) + ", " + num(secs) + " s");
}

// 6. Gurvits ball inside PPT.
void criterion6(Verdict& v) {
  const double r = gurvits_radius(4);
  const DensityMatrix mm = DensityMatrix::maximally_mixed({2, 2});
  int failures = 0, outside = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed + 6, i));
    const DensityMatrix rho = audit::random_state_in_ball(rng, r);
    outside += audit::trace_distance(rho, mm) > r + 1e-12;
    failures += !is_ppt(rho);
  }
  v.require(outside == 0, "every sample inside the ball");
  v.require(failures == 0, "0 PPT failures");
  v.info("radius " + num(r) + ", failures " + std::to_string(failures) + "/1000");
}

// 7. Ray robustness toward 1/4 bounded by the kappa-ball formula.
void criterion7(Verdict& v) {
  const DensityMatrix mm = DensityMatrix::maximally_mixed({2, 2});
  const double kappa = 1 / std::sqrt(12.0);
  const double bound = 2 * 0.75 * std::sqrt(12.0) - 1;
  double worst = 0;
  int over = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density(4, 1 + i % 4, derive_seed(kSeed + 7, i), {2, 2});
    const RobustnessResult res = robustness_along_ray(rho, mm, ppt_oracle());
    const double val = res.value.as_double();
    worst = std::max(worst, val);
    over += !(val <= bound + 1e-6);
  }
  const double L = lipschitz_from_kappa_ball(mm, kappa).L;
  v.require(over == 0, "all values <= 2(3/4)sqrt(12) - 1 + 1e-6");
  v.require(std::abs(bound_from_kappa_ball(mm, kappa) - bound) <= 1e-12, "bound formula");
  v.require(std::abs(L - std::sqrt(27.0 / 4.0)) <= 1e-12, "L = sqrt(27/4) within 1e-12");
  v.info("max value " + num(worst) + " vs bound " + num(bound) + ", L = " + num(L));
}

// Independent check: bisection on lambda_min((1+s) sigma - rho) >= 0 with Eigen.
double bisect_min_scaling(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const Eigen::MatrixXcd r = testing::to_eigen(rho.matrix()), s = testing::to_eigen(sigma.matrix());
  const auto feasible = [&](double x) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((1 + x) * s - r, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0) >= 0;
  };
  if (feasible(0)) return 0;
  double lo = 0, hi = 1;
  while (!feasible(hi)) lo = hi, hi *= 2;
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

void criterion8(Verdict& v) {
  double worst = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(derive_seed(kSeed + 8, i));
    const DensityMatrix rho = random_density(4, 1 + i % 4, rng, {2, 2});
    const DensityMatrix sigma = random_density(4, 4, rng, {2, 2});
    worst = std::max(worst, std::abs(min_scaling_robustness(rho, sigma).as_double() - bisect_min_scaling(rho, sigma)));
  }
  v.require(worst <= 1e-8, "agreement within 1e-8");
  v.info("max |closed - bisection| = " + num(worst));
}

// 9. Teleportation constant and unfaithful set on Bell-diagonal states.
void criterion9(Verdict& v) {
  v.require(lipschitz_teleport(2).L == 3.0, "lipschitz_teleport(2).L == 3");
  int mismatches = 0, unfaithful = 0;
  double worst = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const BellDiagonalParams c = random_bell_diagonal(derive_seed(kSeed + 9, i));
    const std::array<double, 4> w = bell_weights(c);
    const double p_max = *std::max_element(w.begin(), w.end());
    const DensityMatrix rho = bell_diagonal(c);
    const bool u = is_unfaithful(rho);
    unfaithful += u;
    mismatches += u != (p_max <= 0.5);
    worst = std::max(worst, std::abs(singlet_fraction(rho) - p_max));
  }
  v.require(mismatches == 0, "is_unfaithful <=> p_max <= 1/2");
  v.require(worst <= 1e-3, "numeric singlet fraction within 1e-3 of p_max");
  v.info("L = 3, unfaithful " + std::to_string(unfaithful) + "/100, max |F - p_max| = " + num(worst));
}

// 10. Mixtures of quantum-classical states with 1/4 stay zero-discord.
void criterion10(Verdict& v) {
  const DensityMatrix mm = DensityMatrix::maximally_mixed({2, 2});
  double worst = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed + 10, i));
    const DensityMatrix qc = random_quantum_classical(rng);
    for (int k = 0; k < 10; ++k)
      worst = std::max(worst, discord_defect(DensityMatrix::mix(k / 9.0, mm, qc)).value);
  }
  v.require(worst <= 1e-9, "defect <= 1e-9 on 10^4 mixtures");
  v.info("max defect " + num(worst));
}

// 11. Bounds consistency and the filtered-state identity.
void criterion11(Verdict& v) {
  int inverted = 0;
  double bds_err = 0, filt_err = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density(4, 1 + i % 4, derive_seed(kSeed + 11, i), {2, 2});
    const DiscordBounds b = discord_robustness_bounds(rho);
    inverted += !(b.lo <= b.hi);
    const BlochTwoQubit bl = bloch_decompose(rho);
    const double marg = std::max(std::sqrt(bl.x[0] * bl.x[0] + bl.x[1] * bl.x[1] + bl.x[2] * bl.x[2]),
                                 std::sqrt(bl.y[0] * bl.y[0] + bl.y[1] * bl.y[1] + bl.y[2] * bl.y[2]));
    filt_err = std::max(filt_err, std::abs(audit::trace_distance(rho, filtered_state(rho)) - marg));

    const BellDiagonalParams c = random_bell_diagonal(derive_seed(kSeed + 111, i));
    const DiscordBounds bb = discord_robustness_bounds(bell_diagonal(c));
    bds_err = std::max({bds_err, std::abs(bb.lo - middle_abs(c)), std::abs(bb.hi - middle_abs(c))});
  }
  v.require(inverted == 0, "lo <= hi on 200 states");
  v.require(bds_err <= 1e-9, "lo = hi = |c2| on Bell-diagonal inputs");
  v.require(filt_err <= 1e-9, "filtered identity within 1e-9");
  v.info("max BDS bound error " + num(bds_err) + ", max filtered-identity error " + num(filt_err));
}

// 12. Convex free set gives a convex measure; the discord axes do not.
void criterion12(Verdict& v) {
  audit::AuditConfig cfg;
  cfg.samples = 1000;
  cfg.seed = kSeed + 12;
  cfg.threads = audit::threads_from_env();
  const audit::ConvexityReport ppt = audit::audit_convexity_states(audit::ppt_ray_measure, audit::two_qubit_triples(), cfg);
  cfg.samples = 200;
  const audit::ConvexityReport disc =
      audit::audit_convexity_states(audit::bds_discord_measure, audit::axis_endpoint_triples(), cfg);
  v.require(ppt.violations == 0, "PPT-ray measure: 0 violations");
  v.require(disc.violations >= 1, "discord axis endpoints: >= 1 violation");
  v.info("PPT-ray violations " + std::to_string(ppt.violations) + "/1000, discord violations " +
         std::to_string(disc.violations) + "/200 (worst excess " + num(disc.worst_excess) + ")");
}

struct Criterion {
  const char* title;
  std::function<void(Verdict&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {"closed-form discord on 500 Bell-diagonal states", criterion1},
      {"Werner family R = 1 - p", criterion2},
      {"counterexample 1 values and jump", criterion3},
      {"counterexample 2 shared corner and interior", criterion4},
      {"Lipschitz audit, L = 4, 10^4 pairs", criterion5},
      {"Gurvits ball inside PPT", criterion6},
      {"kappa-ball bound and constant", criterion7},
      {"min-scaling vs bisection", criterion8},
      {"teleportation constant and unfaithful set", criterion9},
      {"star convexity of zero-discord states", criterion10},
      {"discord bounds and filtered identity", criterion11},
      {"convexity property pair", criterion12},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robustlab acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    Verdict v;
    try {
      criteria()[i].run(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.info(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %zu: %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria()[i].title,
                v.detail.str().c_str());
    for (const std::string& n : v.notes) std::printf("    note: %s\n", n.c_str());
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
