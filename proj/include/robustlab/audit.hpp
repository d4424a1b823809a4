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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "robustlab/free_sets.hpp"
#include "robustlab/robustness.hpp"
#include "robustlab/states.hpp"

namespace robustlab::audit {

struct AuditConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::string sampler = "default";
  /// Worker threads; results never depend on this value.
  unsigned threads = 1;
};

/// Worker count from ROBUSTLAB_THREADS (at least 1), or `fallback` if unset.
unsigned threads_from_env(unsigned fallback = 1);

/// Calls fn(i) for i in [0, count) on up to `threads` workers.
void run_indexed(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

template <class Point>
struct PairSample {
  Point a;
  Point b;
  std::string regime;
};

template <class Point>
using PairSampler = std::function<PairSample<Point>(std::size_t index, Rng& rng)>;

template <class Point>
struct TripleSample {
  Point a;
  Point b;
  double alpha = 0.5;
  std::string regime;
};

template <class Point>
using TripleSampler = std::function<TripleSample<Point>(std::size_t index, Rng& rng)>;

template <class Point>
using PointSampler = std::function<Point(std::size_t index, Rng& rng)>;

// --- reports ----------------------------------------------------------------

struct LipschitzReport {
  double L_claimed = 0.0;
  std::string provenance;
  std::size_t pairs_tested = 0;
  std::size_t infinite_skipped = 0;
  double max_ratio = 0.0;
  std::pair<std::string, std::string> worst_pair;
  std::size_t violations = 0;
};

struct FaithfulnessReport {
  std::size_t samples = 0;
  std::size_t free_samples = 0;
  std::size_t nonfree_samples = 0;
  std::size_t mismatches = 0;
  double zero_tolerance = 0.0;
  std::vector<std::string> first_mismatches;
};

struct MonotonicityReport {
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst_increase = 0.0;
  std::string worst_case;
  std::vector<std::string> channels;
};

struct ConvexityReport {
  std::size_t triples = 0;
  std::size_t violations = 0;
  double worst_excess = 0.0;
  std::string worst_case;
};

nlohmann::ordered_json to_json(const LipschitzReport& r);
nlohmann::ordered_json to_json(const FaithfulnessReport& r);
nlohmann::ordered_json to_json(const MonotonicityReport& r);
nlohmann::ordered_json to_json(const ConvexityReport& r);
nlohmann::ordered_json to_json(const StarConvexityReport& r);

std::string sample_id(std::size_t index, const std::string& regime, char side);

// --- audits -----------------------------------------------------------------

/// Ratio |f(a) - f(b)| / dist(a, b) over sampled pairs. Pairs with an
/// infinite value are excluded from the ratio statistics and counted.
template <class Point>
LipschitzReport audit_lipschitz(const std::function<double(const Point&)>& measure,
                                const std::function<double(const Point&, const Point&)>& distance,
                                const PairSampler<Point>& sampler, const LipschitzConstant& L,
                                const AuditConfig& cfg) {
  struct Outcome {
    bool finite = false;
    double ratio = 0.0;
    std::string regime;
  };
  std::vector<Outcome> out(cfg.samples);
  run_indexed(cfg.samples, cfg.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    const PairSample<Point> p = sampler(i, rng);
    const double fa = measure(p.a);
    const double fb = measure(p.b);
    out[i].regime = p.regime;
    if (!std::isfinite(fa) || !std::isfinite(fb)) return;
    out[i].finite = true;
    const double d = distance(p.a, p.b);
    const double df = std::abs(fa - fb);
    out[i].ratio = d > 0 ? df / d : (df > 0 ? std::numeric_limits<double>::infinity() : 0.0);
  });
  LipschitzReport rep;
  rep.L_claimed = L.L;
  rep.provenance = L.provenance;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].finite) {
      ++rep.infinite_skipped;
      continue;
    }
    ++rep.pairs_tested;
    if (out[i].ratio > L.L * (1.0 + 1e-6)) ++rep.violations;
    if (rep.worst_pair.first.empty() || out[i].ratio > rep.max_ratio) {
      rep.max_ratio = out[i].ratio;
      rep.worst_pair = {sample_id(i, out[i].regime, 'a'), sample_id(i, out[i].regime, 'b')};
    }
  }
  return rep;
}

/// measure(x) == 0 (within cfg.tolerance) must agree with member(x).
template <class Point>
FaithfulnessReport audit_faithfulness(const std::function<double(const Point&)>& measure,
                                      const std::function<bool(const Point&)>& member,
                                      const PointSampler<Point>& sampler, const AuditConfig& cfg) {
  struct Outcome {
    bool member = false;
    bool zero = false;
  };
  std::vector<Outcome> out(cfg.samples);
  run_indexed(cfg.samples, cfg.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    const Point x = sampler(i, rng);
    out[i].member = member(x);
    out[i].zero = std::abs(measure(x)) <= cfg.tolerance;
  });
  FaithfulnessReport rep;
  rep.samples = cfg.samples;
  rep.zero_tolerance = cfg.tolerance;
  for (std::size_t i = 0; i < out.size(); ++i) {
    (out[i].member ? rep.free_samples : rep.nonfree_samples)++;
    if (out[i].member != out[i].zero) {
      ++rep.mismatches;
      if (rep.first_mismatches.size() < 10) rep.first_mismatches.push_back(sample_id(i, "point", 'x'));
    }
  }
  return rep;
}

/// measure(a alpha + b (1 - alpha)) <= alpha f(a) + (1 - alpha) f(b) + tol.
template <class Point>
ConvexityReport audit_convexity(const std::function<double(const Point&)>& measure,
                                const std::function<Point(double, const Point&, const Point&)>& mix,
                                const TripleSampler<Point>& sampler, const AuditConfig& cfg) {
  struct Outcome {
    double excess = -std::numeric_limits<double>::infinity();
    std::string regime;
  };
  std::vector<Outcome> out(cfg.samples);
  run_indexed(cfg.samples, cfg.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    const TripleSample<Point> t = sampler(i, rng);
    const double fa = measure(t.a);
    const double fb = measure(t.b);
    const double fm = measure(mix(t.alpha, t.a, t.b));
    out[i].regime = t.regime;
    if (!std::isfinite(fa) || !std::isfinite(fb)) return;
    out[i].excess = fm - (t.alpha * fa + (1.0 - t.alpha) * fb);
  });
  ConvexityReport rep;
  rep.triples = cfg.samples;
  rep.worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].excess > cfg.tolerance) ++rep.violations;
    if (out[i].excess > rep.worst_excess) {
      rep.worst_excess = out[i].excess;
      rep.worst_case = sample_id(i, out[i].regime, 'm');
    }
  }
  return rep;
}

struct Channel {
  std::string name;
  std::function<DensityMatrix(const DensityMatrix&)> apply;
};

Channel local_unitary_channel(std::string name, const ComplexMatrix& u, const ComplexMatrix& v);
/// rho -> (1 - q) rho + q 1/D.
Channel depolarizing_channel(double q);
/// Projective measurement of B in the basis given by the columns of `basis`,
/// re-preparing the observed basis state.
Channel measure_prepare_b_channel(const ComplexMatrix& basis);
/// Local unitaries that permute / re-sign the Bell-diagonal coefficients:
/// X (x) 1, H (x) H, S (x) S.
std::vector<Channel> bell_diagonal_symmetry_channels();

/// Requires every channel to keep `free_samples` free (ConfigurationError
/// otherwise), then checks measure(rho) >= measure(C(rho)) - tol.
MonotonicityReport audit_monotonicity(const std::function<double(const DensityMatrix&)>& measure,
                                      const std::vector<Channel>& channels,
                                      const FreeSetOracle& oracle,
                                      const PointSampler<DensityMatrix>& free_samples,
                                      const PointSampler<DensityMatrix>& sampler,
                                      const AuditConfig& cfg);

// --- state-valued conveniences and shipped samplers -------------------------

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

LipschitzReport audit_lipschitz_states(const std::function<double(const DensityMatrix&)>& measure,
                                       const PairSampler<DensityMatrix>& sampler,
                                       const LipschitzConstant& L, const AuditConfig& cfg);

ConvexityReport audit_convexity_states(const std::function<double(const DensityMatrix&)>& measure,
                                       const TripleSampler<DensityMatrix>& sampler,
                                       const AuditConfig& cfg);

/// Bell-diagonal pairs in four regimes by index: independent, nearby at
/// eps = 1e-2, nearby at eps = 1e-3, straddling a coordinate axis.
PairSampler<BellDiagonalParams> bell_diagonal_pairs();
PairSampler<DensityMatrix> bell_diagonal_state_pairs();

/// Counterexample-1 abscissae: independent in [-1, 1], nearby, and pairs
/// straddling t = 0 at distance up to 1e-3.
PairSampler<double> counterexample1_pairs();

/// Alternates axis points (free) and uniform Bell-diagonal points.
PointSampler<DensityMatrix> bds_axis_and_generic_points();
PointSampler<DensityMatrix> bds_axis_points();
PointSampler<DensityMatrix> bds_points();

/// Random two-qubit states of random rank, mixed towards 1/4 with a random
/// weight so that both PPT and NPT states occur.
PointSampler<DensityMatrix> mixed_two_qubit_points();

TripleSampler<DensityMatrix> two_qubit_triples();
/// rho1 = bds(a e_i), rho2 = bds(b e_j), i != j: free endpoints with a
/// non-free interior.
TripleSampler<DensityMatrix> axis_endpoint_triples();

/// discord_robustness_bds on a Bell-diagonal state; throws ValidationError
/// on other input.
double bds_discord_measure(const DensityMatrix& rho);

}  // namespace robustlab::audit
