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

#include "robustlab/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "robustlab/error.hpp"

namespace robustlab {

namespace {

std::vector<std::size_t> default_dims(std::size_t dim, std::vector<std::size_t> dims) {
  if (!dims.empty()) return dims;
  if (dim == 4) return {2, 2};
  return {dim};
}

}  // namespace

DensityMatrix::DensityMatrix(HermitianOperator op, std::vector<std::size_t> dims,
                             const Tolerances& tol)
    : op_(std::move(op)), dims_(std::move(dims)) {
  if (op_.dim() > kMaxDim) {
    throw ValidationError("DensityMatrix: dimension exceeds " + std::to_string(kMaxDim));
  }
  std::size_t prod = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw ValidationError("DensityMatrix: zero subsystem dimension");
    prod *= d;
  }
  if (dims_.empty() || prod != op_.dim()) {
    throw ValidationError("DensityMatrix: dims product does not match operator dimension");
  }
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream os;
    os << "DensityMatrix: trace = 1 violated (trace = " << tr << ")";
    throw ValidationError(os.str());
  }
  const double lmin = eig_hermitian(op_, tol).min();
  if (lmin < -tol.psd) {
    std::ostringstream os;
    os << "DensityMatrix: positive semidefiniteness violated (lambda_min = " << lmin << ")";
    throw InvalidParametersError(os.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<std::size_t> dims) {
  std::size_t d = 1;
  for (std::size_t k : dims) d *= k;
  return DensityMatrix(HermitianOperator::identity(d) * (1.0 / static_cast<double>(d)),
                       std::move(dims));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes,
                                  std::vector<std::size_t> dims) {
  double n2 = 0.0;
  for (const Complex& a : amplitudes) n2 += std::norm(a);
  if (!(n2 > 0)) throw ValidationError("DensityMatrix::pure: zero vector");
  ComplexMatrix m = ComplexMatrix::outer(amplitudes, amplitudes);
  m *= 1.0 / n2;
  return DensityMatrix(HermitianOperator(std::move(m)),
                       default_dims(amplitudes.size(), std::move(dims)));
}

bool DensityMatrix::is_two_qubit() const noexcept {
  return dims_.size() == 2 && dims_[0] == 2 && dims_[1] == 2;
}

double DensityMatrix::purity() const {
  double p = 0.0;
  for (const Complex& z : matrix().entries()) p += std::norm(z);
  return p;
}

DensityMatrix DensityMatrix::mix(double w, const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dims_ != b.dims_) throw ValidationError("DensityMatrix::mix: dims differ");
  if (!(w >= 0.0 && w <= 1.0)) throw ValidationError("DensityMatrix::mix: weight outside [0,1]");
  return DensityMatrix(a.op_ * w + b.op_ * (1.0 - w), a.dims_);
}

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (!rho.is_two_qubit()) {
    throw ValidationError(std::string(what) + ": expected a two-qubit state with dims [2,2]");
  }
}

// --- Bell-diagonal family ---------------------------------------------------

std::array<double, 4> bell_weights(const BellDiagonalParams& c) {
  return {(1 + c.c1 - c.c2 + c.c3) / 4, (1 - c.c1 + c.c2 + c.c3) / 4,
          (1 + c.c1 + c.c2 - c.c3) / 4, (1 - c.c1 - c.c2 - c.c3) / 4};
}

void validate_bell_diagonal(const BellDiagonalParams& c, const Tolerances& tol) {
  for (double v : {c.c1, c.c2, c.c3}) {
    if (!std::isfinite(v)) throw InvalidParametersError("Bell-diagonal parameter is not finite");
  }
  struct Constraint {
    double value;
    const char* text;
  };
  const Constraint constraints[4] = {
      {1 - c.c1 - c.c2 - c.c3, "1-c1-c2-c3 >= 0"},
      {1 - c.c1 + c.c2 + c.c3, "1-c1+c2+c3 >= 0"},
      {1 + c.c1 - c.c2 + c.c3, "1+c1-c2+c3 >= 0"},
      {1 + c.c1 + c.c2 - c.c3, "1+c1+c2-c3 >= 0"},
  };
  for (const auto& k : constraints) {
    if (k.value < -tol.bds_positivity) {
      std::ostringstream os;
      os << k.text << " violated (value " << k.value << ")";
      throw InvalidParametersError(os.str());
    }
  }
}

bool is_valid_bell_diagonal(const BellDiagonalParams& c, const Tolerances& tol) {
  try {
    validate_bell_diagonal(c, tol);
    return true;
  } catch (const InvalidParametersError&) {
    return false;
  }
}

std::array<std::array<Complex, 4>, 4> bell_vectors() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{
      {h, 0, 0, h},   // phi+
      {h, 0, 0, -h},  // phi-
      {0, h, h, 0},   // psi+
      {0, h, -h, 0},  // psi-
  }};
}

std::array<DensityMatrix, 4> bell_states() {
  const auto v = bell_vectors();
  return {DensityMatrix::pure(v[0], {2, 2}), DensityMatrix::pure(v[1], {2, 2}),
          DensityMatrix::pure(v[2], {2, 2}), DensityMatrix::pure(v[3], {2, 2})};
}

DensityMatrix bell_diagonal(const BellDiagonalParams& c, const Tolerances& tol) {
  validate_bell_diagonal(c, tol);
  BlochTwoQubit b;
  b.T[0][0] = c.c1;
  b.T[1][1] = c.c2;
  b.T[2][2] = c.c3;
  return DensityMatrix(bloch_operator(b), {2, 2}, tol);
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParametersError("werner: p must lie in [0,1]");
  const double c = -(1.0 - p);
  return bell_diagonal({c, c, c});
}

// --- Bloch form -------------------------------------------------------------

BlochTwoQubit bloch_decompose(const DensityMatrix& rho) {
  require_two_qubit(rho, "bloch_decompose");
  const ComplexMatrix& m = rho.matrix();
  auto expect = [&](int i, int j) {
    const ComplexMatrix p = kron(pauli(i), pauli(j));
    Complex s = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) s += m(r, c) * p(c, r);
    return s.real();
  };
  BlochTwoQubit b;
  for (int i = 0; i < 3; ++i) {
    b.x[i] = expect(i + 1, 0);
    b.y[i] = expect(0, i + 1);
    for (int j = 0; j < 3; ++j) b.T[i][j] = expect(i + 1, j + 1);
  }
  return b;
}

HermitianOperator bloch_operator(const BlochTwoQubit& b) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (int i = 0; i < 3; ++i) {
    if (b.x[i] != 0.0) m += kron(pauli(i + 1), pauli(0)) * Complex(b.x[i]);
    if (b.y[i] != 0.0) m += kron(pauli(0), pauli(i + 1)) * Complex(b.y[i]);
    for (int j = 0; j < 3; ++j)
      if (b.T[i][j] != 0.0) m += kron(pauli(i + 1), pauli(j + 1)) * Complex(b.T[i][j]);
  }
  m *= 0.25;
  return HermitianOperator(std::move(m));
}

DensityMatrix bloch_compose(const BlochTwoQubit& b, const Tolerances& tol) {
  return DensityMatrix(bloch_operator(b), {2, 2}, tol);
}

std::optional<BellDiagonalParams> as_bell_diagonal(const DensityMatrix& rho,
                                                   const Tolerances& tol) {
  if (!rho.is_two_qubit()) return std::nullopt;
  const BlochTwoQubit b = bloch_decompose(rho);
  const double eps = tol.bell_diagonal_detection;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(b.x[i]) > eps || std::abs(b.y[i]) > eps) return std::nullopt;
    for (int j = 0; j < 3; ++j)
      if (i != j && std::abs(b.T[i][j]) > eps) return std::nullopt;
  }
  return BellDiagonalParams{b.T[0][0], b.T[1][1], b.T[2][2]};
}

DensityMatrix state_inversion(const DensityMatrix& rho) {
  require_two_qubit(rho, "state_inversion");
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  return DensityMatrix(HermitianOperator(yy * rho.matrix().transpose() * yy), rho.dims());
}

DensityMatrix filtered_state(const DensityMatrix& rho) {
  BlochTwoQubit b = bloch_decompose(rho);
  b.x = {};
  b.y = {};
  return bloch_compose(b);
}

// --- samplers ---------------------------------------------------------------

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 over a mix of both words
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng,
                             std::vector<std::size_t> dims) {
  if (dim == 0 || dim > kMaxDim) throw ValidationError("random_density: invalid dimension");
  if (rank < 1 || rank > dim) throw ValidationError("random_density: rank must lie in [1, D]");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < rank; ++k) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, k) = Complex(re, im);
    }
  ComplexMatrix m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  return DensityMatrix(HermitianOperator(std::move(m)), default_dims(dim, std::move(dims)));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed,
                             std::vector<std::size_t> dims) {
  Rng rng(seed);
  return random_density(dim, rank, rng, std::move(dims));
}

BellDiagonalParams random_bell_diagonal(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 4> w{};
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - u(rng));
    total += x;
  }
  for (double& x : w) x /= total;
  // Vertices: phi+ (1,-1,1), phi- (-1,1,1), psi+ (1,1,-1), psi- (-1,-1,-1).
  BellDiagonalParams c;
  c.c1 = w[0] - w[1] + w[2] - w[3];
  c.c2 = -w[0] + w[1] + w[2] - w[3];
  c.c3 = w[0] + w[1] - w[2] - w[3];
  return c;
}

BellDiagonalParams random_bell_diagonal(std::uint64_t seed) {
  Rng rng(seed);
  return random_bell_diagonal(rng);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      q(i, j) = Complex(re, im);
    }
  // Modified Gram-Schmidt on columns; the R diagonal is then positive, which
  // is exactly the phase fix that makes the distribution Haar.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, j)) * q(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, k) -= dot * q(i, j);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, k));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= nrm;
  }
  return q;
}

DensityMatrix random_quantum_classical(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> rank_pick(1, 2);
  const double p = u(rng);
  const ComplexMatrix basis = random_unitary(2, rng);
  ComplexMatrix total(4, 4);
  for (int i = 0; i < 2; ++i) {
    const DensityMatrix rho_a = random_density(2, static_cast<std::size_t>(rank_pick(rng)), rng);
    const std::array<Complex, 2> psi{basis(0, i), basis(1, i)};
    const ComplexMatrix proj = ComplexMatrix::outer(psi, psi);
    total += kron(rho_a.matrix(), proj) * Complex(i == 0 ? p : 1.0 - p);
  }
  return DensityMatrix(HermitianOperator(std::move(total)), {2, 2});
}

}  // namespace robustlab
