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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "robustlab/linalg.hpp"
#include "robustlab/tolerances.hpp"

namespace robustlab {

using Rng = std::mt19937_64;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Positive-semidefinite, unit-trace operator with subsystem dimensions.
/// Construction validates trace and lambda_min against the tolerances.
class DensityMatrix {
 public:
  DensityMatrix(HermitianOperator op, std::vector<std::size_t> dims,
                const Tolerances& tol = kDefaultTolerances);

  static DensityMatrix maximally_mixed(std::vector<std::size_t> dims);
  static DensityMatrix pure(std::span<const Complex> amplitudes,
                            std::vector<std::size_t> dims);

  const HermitianOperator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return op_.dim(); }
  bool is_two_qubit() const noexcept;

  double purity() const;

  /// Convex combination w * a + (1 - w) * b; dims must agree, w in [0, 1].
  static DensityMatrix mix(double w, const DensityMatrix& a, const DensityMatrix& b);

 private:
  HermitianOperator op_;
  std::vector<std::size_t> dims_;
};

/// Throws ValidationError unless `rho` acts on two qubits.
void require_two_qubit(const DensityMatrix& rho, const char* what);

/// rho = 1/4 (1 + x.sigma (x) 1 + 1 (x) y.sigma + sum T_ij sigma_i (x) sigma_j).
struct BlochTwoQubit {
  Vec3 x{};
  Vec3 y{};
  Mat3 T{};
};

/// Coefficients of rho_BDS = 1/4 (1 + sum_i c_i sigma_i (x) sigma_i).
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  Vec3 as_array() const { return {c1, c2, c3}; }
};

/// Bell-basis weights (phi+, phi-, psi+, psi-) of a Bell-diagonal state:
///   phi+ : (1 + c1 - c2 + c3) / 4     phi- : (1 - c1 + c2 + c3) / 4
///   psi+ : (1 + c1 + c2 - c3) / 4     psi- : (1 - c1 - c2 - c3) / 4
std::array<double, 4> bell_weights(const BellDiagonalParams& c);

/// Throws InvalidParametersError naming the first violated inequality.
void validate_bell_diagonal(const BellDiagonalParams& c,
                            const Tolerances& tol = kDefaultTolerances);
bool is_valid_bell_diagonal(const BellDiagonalParams& c,
                            const Tolerances& tol = kDefaultTolerances);

/// Bell states in the fixed order phi+, phi-, psi+, psi-. Their correlation
/// matrices are diag(1,-1,1), diag(-1,1,1), diag(1,1,-1), diag(-1,-1,-1).
std::array<DensityMatrix, 4> bell_states();
std::array<std::array<Complex, 4>, 4> bell_vectors();

DensityMatrix bell_diagonal(const BellDiagonalParams& c,
                            const Tolerances& tol = kDefaultTolerances);

/// (1 - p) |psi-><psi-| + p 1/4, equal to bell_diagonal(-(1-p), -(1-p), -(1-p)).
DensityMatrix werner(double p);

BlochTwoQubit bloch_decompose(const DensityMatrix& rho);
/// Operator assembled from Bloch parameters, without any PSD check.
HermitianOperator bloch_operator(const BlochTwoQubit& b);
DensityMatrix bloch_compose(const BlochTwoQubit& b,
                            const Tolerances& tol = kDefaultTolerances);

/// Returns the Bell-diagonal parameters when x = y = 0 and T is diagonal
/// (within tol.bell_diagonal_detection), otherwise nothing.
std::optional<BellDiagonalParams> as_bell_diagonal(const DensityMatrix& rho,
                                                   const Tolerances& tol = kDefaultTolerances);

/// (sigma_2 (x) sigma_2) rho^T (sigma_2 (x) sigma_2).
DensityMatrix state_inversion(const DensityMatrix& rho);

/// The state with the same T and x = y = 0.
DensityMatrix filtered_state(const DensityMatrix& rho);

// --- samplers ---------------------------------------------------------------
// Every sampler is a pure function of the engine state it is handed.

/// G G^dagger / Tr, G a D x rank matrix of iid complex Gaussians; this is the
/// reduced state of a Gaussian-amplitude pure state on C^D (x) C^rank.
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng,
                             std::vector<std::size_t> dims = {});
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed,
                             std::vector<std::size_t> dims = {});

/// Uniform on the tetrahedron: Dirichlet(1,1,1,1) weights over the four Bell
/// states.
BellDiagonalParams random_bell_diagonal(Rng& rng);
BellDiagonalParams random_bell_diagonal(std::uint64_t seed);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// sum_i p_i rho_i (x) |psi_i><psi_i| with random weights, random qubit
/// states rho_i and a random orthonormal basis {psi_i} of B.
DensityMatrix random_quantum_classical(Rng& rng);

/// Derives an independent 64-bit seed for sample `index` of a run.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace robustlab
