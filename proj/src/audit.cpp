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

#include "robustlab/audit.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "robustlab/error.hpp"

namespace robustlab::audit {

unsigned threads_from_env(unsigned fallback) {
  const char* env = std::getenv("ROBUSTLAB_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1u, fallback);
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<unsigned>(v);
}

void run_indexed(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string sample_id(std::size_t index, const std::string& regime, char side) {
  return "#" + std::to_string(index) + ":" + regime + "/" + side;
}

// --- JSON -------------------------------------------------------------------

namespace {

nlohmann::ordered_json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json();
}

}  // namespace

nlohmann::ordered_json to_json(const LipschitzReport& r) {
  nlohmann::ordered_json j;
  j["L_claimed"] = r.L_claimed;
  j["provenance"] = r.provenance;
  j["pairs_tested"] = r.pairs_tested;
  j["infinite_skipped"] = r.infinite_skipped;
  j["max_ratio"] = finite_or_null(r.max_ratio);
  j["worst_pair"] = {r.worst_pair.first, r.worst_pair.second};
  j["violations"] = r.violations;
  return j;
}

nlohmann::ordered_json to_json(const FaithfulnessReport& r) {
  nlohmann::ordered_json j;
  j["samples"] = r.samples;
  j["free_samples"] = r.free_samples;
  j["nonfree_samples"] = r.nonfree_samples;
  j["mismatches"] = r.mismatches;
  j["zero_tolerance"] = r.zero_tolerance;
  j["first_mismatches"] = r.first_mismatches;
  return j;
}

nlohmann::ordered_json to_json(const MonotonicityReport& r) {
  nlohmann::ordered_json j;
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  j["worst_increase"] = r.worst_increase;
  j["worst_case"] = r.worst_case;
  j["channels"] = r.channels;
  return j;
}

nlohmann::ordered_json to_json(const ConvexityReport& r) {
  nlohmann::ordered_json j;
  j["triples"] = r.triples;
  j["violations"] = r.violations;
  j["worst_excess"] = finite_or_null(r.worst_excess);
  j["worst_case"] = r.worst_case;
  return j;
}

nlohmann::ordered_json to_json(const StarConvexityReport& r) {
  nlohmann::ordered_json j;
  j["oracle"] = r.oracle;
  j["samples"] = r.samples;
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  j["center_is_member"] = r.center_is_member;
  auto v = nlohmann::ordered_json::array();
  for (const auto& x : r.first_violations) v.push_back({{"sample", x.sample}, {"weight", x.weight}});
  j["first_violations"] = std::move(v);
  return j;
}

// --- channels ---------------------------------------------------------------

Channel local_unitary_channel(std::string name, const ComplexMatrix& u, const ComplexMatrix& v) {
  const ComplexMatrix uv = kron(u, v);
  return {std::move(name), [uv](const DensityMatrix& rho) {
            return DensityMatrix(rho.op().conjugated_by(uv), rho.dims());
          }};
}

Channel depolarizing_channel(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw ConfigurationError("depolarizing_channel: q must lie in [0,1]");
  return {"depolarizing(q=" + std::to_string(q) + ")", [q](const DensityMatrix& rho) {
            return DensityMatrix::mix(1.0 - q, rho, DensityMatrix::maximally_mixed(rho.dims()));
          }};
}

Channel measure_prepare_b_channel(const ComplexMatrix& basis) {
  if (basis.rows() != 2 || basis.cols() != 2)
    throw ConfigurationError("measure_prepare_b_channel: expects a 2x2 basis");
  std::vector<ComplexMatrix> projectors;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::array<Complex, 2> psi{basis(0, i), basis(1, i)};
    projectors.push_back(kron(ComplexMatrix::identity(2), ComplexMatrix::outer(psi, psi)));
  }
  return {"measure-prepare-B", [projectors](const DensityMatrix& rho) {
            require_two_qubit(rho, "measure_prepare_b_channel");
            ComplexMatrix out(4, 4);
            for (const ComplexMatrix& p : projectors) out += p * rho.matrix() * p;
            return DensityMatrix(HermitianOperator(std::move(out)), rho.dims());
          }};
}

std::vector<Channel> bell_diagonal_symmetry_channels() {
  const double h = 1.0 / std::sqrt(2.0);
  const ComplexMatrix hadamard(2, 2, {h, h, h, -h});
  const ComplexMatrix phase(2, 2, {1.0, 0.0, 0.0, Complex(0.0, 1.0)});
  return {local_unitary_channel("X(x)1", pauli(1), pauli(0)),
          local_unitary_channel("H(x)H", hadamard, hadamard),
          local_unitary_channel("S(x)S", phase, phase)};
}

MonotonicityReport audit_monotonicity(const std::function<double(const DensityMatrix&)>& measure,
                                      const std::vector<Channel>& channels,
                                      const FreeSetOracle& oracle,
                                      const PointSampler<DensityMatrix>& free_samples,
                                      const PointSampler<DensityMatrix>& sampler,
                                      const AuditConfig& cfg) {
  const std::size_t probe = std::min<std::size_t>(cfg.samples, 100);
  for (const Channel& ch : channels) {
    for (std::size_t i = 0; i < probe; ++i) {
      Rng rng(derive_seed(cfg.seed ^ 0x5A5A5A5AULL, i));
      const DensityMatrix f = free_samples(i, rng);
      if (!oracle.member(f))
        throw ConfigurationError("audit_monotonicity: free sampler produced a non-member of '" +
                                 oracle.name + "'");
      if (!oracle.member(ch.apply(f)))
        throw ConfigurationError("audit_monotonicity: channel '" + ch.name +
                                 "' does not preserve the free set '" + oracle.name + "'");
    }
  }
  struct Outcome {
    std::vector<double> increase;
  };
  std::vector<Outcome> out(cfg.samples);
  run_indexed(cfg.samples, cfg.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    const DensityMatrix rho = sampler(i, rng);
    const double m0 = measure(rho);
    for (const Channel& ch : channels) out[i].increase.push_back(measure(ch.apply(rho)) - m0);
  });
  MonotonicityReport rep;
  for (const Channel& ch : channels) rep.channels.push_back(ch.name);
  rep.worst_increase = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const double inc = out[i].increase[c];
      ++rep.checks;
      if (inc > cfg.tolerance) ++rep.violations;
      if (inc > rep.worst_increase) {
        rep.worst_increase = inc;
        rep.worst_case = sample_id(i, channels[c].name, 'x');
      }
    }
  }
  return rep;
}

// --- state-valued conveniences ----------------------------------------------

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_norm(a.op() - b.op());
}

LipschitzReport audit_lipschitz_states(const std::function<double(const DensityMatrix&)>& measure,
                                       const PairSampler<DensityMatrix>& sampler,
                                       const LipschitzConstant& L, const AuditConfig& cfg) {
  return audit_lipschitz<DensityMatrix>(measure, trace_distance, sampler, L, cfg);
}

ConvexityReport audit_convexity_states(const std::function<double(const DensityMatrix&)>& measure,
                                       const TripleSampler<DensityMatrix>& sampler,
                                       const AuditConfig& cfg) {
  return audit_convexity<DensityMatrix>(measure, DensityMatrix::mix, sampler, cfg);
}

// --- samplers ---------------------------------------------------------------

namespace {

Vec3 random_unit3(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec3 v{g(rng), g(rng), g(rng)};
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (double& x : v) x /= n;
  return v;
}

BellDiagonalParams offset(const BellDiagonalParams& c, const Vec3& u, double eps) {
  return {c.c1 + eps * u[0], c.c2 + eps * u[1], c.c3 + eps * u[2]};
}

BellDiagonalParams axis_point(int axis, double a) {
  BellDiagonalParams c;
  (axis == 0 ? c.c1 : axis == 1 ? c.c2 : c.c3) = a;
  return c;
}

}  // namespace

PairSampler<BellDiagonalParams> bell_diagonal_pairs() {
  return [](std::size_t index, Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    PairSample<BellDiagonalParams> p;
    switch (index % 4) {
      case 0:
        p.a = random_bell_diagonal(rng);
        p.b = random_bell_diagonal(rng);
        p.regime = "independent";
        break;
      case 1:
      case 2: {
        const double eps = index % 4 == 1 ? 1e-2 : 1e-3;
        p.a = random_bell_diagonal(rng);
        p.b = offset(p.a, random_unit3(rng), eps);
        if (!is_valid_bell_diagonal(p.b)) p.b = {(1 - eps) * p.a.c1, (1 - eps) * p.a.c2, (1 - eps) * p.a.c3};
        p.regime = index % 4 == 1 ? "nearby-1e-2" : "nearby-1e-3";
        break;
      }
      default: {
        std::uniform_int_distribution<int> axis(0, 2);
        const BellDiagonalParams base = axis_point(axis(rng), -0.9 + 1.8 * u01(rng));
        const Vec3 dir = random_unit3(rng);
        const double eta = 1e-2 * u01(rng);
        p.a = offset(base, dir, eta);
        p.b = offset(base, dir, -eta);
        p.regime = "straddle-axis";
        break;
      }
    }
    return p;
  };
}

PairSampler<DensityMatrix> bell_diagonal_state_pairs() {
  const auto inner = bell_diagonal_pairs();
  return [inner](std::size_t index, Rng& rng) {
    const PairSample<BellDiagonalParams> p = inner(index, rng);
    return PairSample<DensityMatrix>{bell_diagonal(p.a), bell_diagonal(p.b), p.regime};
  };
}

PairSampler<double> counterexample1_pairs() {
  return [](std::size_t index, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    PairSample<double> p;
    switch (index % 4) {
      case 0:
        p = {u(rng), u(rng), "independent"};
        break;
      case 1:
      case 2: {
        const double eps = index % 4 == 1 ? 1e-2 : 1e-3;
        p.a = 0.99 * u(rng);
        p.b = p.a + eps;
        p.regime = index % 4 == 1 ? "nearby-1e-2" : "nearby-1e-3";
        break;
      }
      default:
        p.a = -1e-3 * (u01(rng) + 1e-9);
        p.b = 1e-3 * u01(rng);
        p.regime = "straddle-zero";
        break;
    }
    return p;
  };
}

PointSampler<DensityMatrix> bds_axis_points() {
  return [](std::size_t, Rng& rng) {
    std::uniform_int_distribution<int> axis(0, 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return bell_diagonal(axis_point(axis(rng), u(rng)));
  };
}

PointSampler<DensityMatrix> bds_points() {
  return [](std::size_t, Rng& rng) { return bell_diagonal(random_bell_diagonal(rng)); };
}

PointSampler<DensityMatrix> bds_axis_and_generic_points() {
  const auto axis = bds_axis_points();
  const auto generic = bds_points();
  return [axis, generic](std::size_t i, Rng& rng) { return i % 2 == 0 ? axis(i, rng) : generic(i, rng); };
}

PointSampler<DensityMatrix> mixed_two_qubit_points() {
  return [](std::size_t, Rng& rng) {
    std::uniform_int_distribution<std::size_t> rank(1, 4);
    std::uniform_real_distribution<double> w(0.0, 1.0);
    const DensityMatrix r = random_density(4, rank(rng), rng, {2, 2});
    return DensityMatrix::mix(w(rng), r, DensityMatrix::maximally_mixed({2, 2}));
  };
}

TripleSampler<DensityMatrix> two_qubit_triples() {
  const auto points = mixed_two_qubit_points();
  return [points](std::size_t i, Rng& rng) {
    std::uniform_real_distribution<double> alpha(0.0, 1.0);
    DensityMatrix a = points(i, rng);
    DensityMatrix b = points(i, rng);
    return TripleSample<DensityMatrix>{std::move(a), std::move(b), alpha(rng), "random"};
  };
}

TripleSampler<DensityMatrix> axis_endpoint_triples() {
  return [](std::size_t, Rng& rng) {
    std::uniform_int_distribution<int> axis(0, 2);
    std::uniform_int_distribution<int> shift(1, 2);
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_real_distribution<double> alpha(0.05, 0.95);
    const int i = axis(rng);
    const int j = (i + shift(rng)) % 3;
    const double a = mag(rng) * (sign(rng) ? 1.0 : -1.0);
    const double b = mag(rng) * (sign(rng) ? 1.0 : -1.0);
    return TripleSample<DensityMatrix>{bell_diagonal(axis_point(i, a)), bell_diagonal(axis_point(j, b)),
                                       alpha(rng), "axis-endpoints"};
  };
}

double bds_discord_measure(const DensityMatrix& rho) {
  const auto c = as_bell_diagonal(rho);
  if (!c) throw ValidationError("bds_discord_measure: input is not Bell-diagonal");
  return discord_robustness_bds(*c);
}

}  // namespace robustlab::audit
