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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "robustlab/error.hpp"
#include "robustlab/linalg.hpp"
#include "robustlab/states.hpp"
#include "test_helpers.hpp"

namespace robustlab {
namespace {

using testing::eigen_eigenvalues;
using testing::random_hermitian;

constexpr double kSqrt2 = 1.4142135623730951;

TEST(ComplexMatrix, RejectsWrongEntryCount) {
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), ValidationError);
}

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
  EXPECT_THROW(ComplexMatrix(1, 2, {1.0, std::nan("")}), ValidationError);
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), ValidationError);
}

TEST(HermitianOperator, RejectsNonHermitian) {
  EXPECT_THROW(HermitianOperator(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})), ValidationError);
  EXPECT_THROW(HermitianOperator(ComplexMatrix(2, 3)), ValidationError);
}

TEST(HermitianOperator, AcceptsRoundoffAndSymmetrises) {
  const HermitianOperator h(ComplexMatrix(2, 2, {1.0, Complex(0.5, 1e-14), Complex(0.5, 0.0), 2.0}));
  EXPECT_EQ(h.matrix()(0, 1), std::conj(h.matrix()(1, 0)));
}

TEST(EigHermitian, DiagonalInput) {
  const std::array<double, 3> d{3.0, 1.0, 2.0};
  const Spectrum s = eig_hermitian(HermitianOperator(ComplexMatrix::diagonal(d)));
  ASSERT_EQ(s.eigenvalues.size(), 3u);
  EXPECT_DOUBLE_EQ(s.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(s.eigenvalues[1], 2.0);
  EXPECT_DOUBLE_EQ(s.eigenvalues[2], 3.0);
}

TEST(EigHermitian, PauliSpectra) {
  for (int i = 1; i <= 3; ++i) {
    const Spectrum s = eig_hermitian(HermitianOperator(pauli(i)));
    EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-14) << "sigma_" << i;
    EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-14) << "sigma_" << i;
  }
}

TEST(EigHermitian, ZeroAndOneByOne) {
  EXPECT_EQ(eig_hermitian(HermitianOperator::zero(3)).eigenvalues, (std::vector<double>{0, 0, 0}));
  EXPECT_DOUBLE_EQ(eig_hermitian(HermitianOperator(ComplexMatrix(1, 1, {-2.5}))).eigenvalues[0], -2.5);
}

class RandomHermitian : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RandomHermitian, MatchesEigenAndReconstructs) {
  const std::size_t n = GetParam();
  Rng rng(derive_seed(7, n));
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianOperator h = random_hermitian(n, rng);
    const Spectrum s = eig_hermitian(h);
    const std::vector<double> ref = eigen_eigenvalues(h.matrix());
    double sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(s.eigenvalues[k], ref[k], 1e-11);
      if (k > 0) EXPECT_LE(s.eigenvalues[k - 1], s.eigenvalues[k]);
      sum += s.eigenvalues[k];
    }
    EXPECT_NEAR(sum, h.trace(), 1e-10);

    const ComplexMatrix& v = s.eigenvectors;
    const ComplexMatrix recon = v * ComplexMatrix::diagonal(s.eigenvalues) * v.adjoint();
    EXPECT_LE(max_abs_diff(recon, h.matrix()), 1e-10 * static_cast<double>(n));
    EXPECT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, RandomHermitian, ::testing::Values(2, 3, 4, 6, 8));

TEST(EigHermitian, DegenerateSpectrum) {
  Rng rng(3);
  const ComplexMatrix u = random_unitary(4, rng);
  const std::array<double, 4> d{0.25, 0.25, 0.25, -0.75};
  const HermitianOperator h(u * ComplexMatrix::diagonal(d) * u.adjoint());
  const Spectrum s = eig_hermitian(h);
  EXPECT_NEAR(s.eigenvalues[0], -0.75, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(s.eigenvalues[k], 0.25, 1e-12);
}

TEST(TraceNorm, Examples) {
  const std::array<double, 2> d{0.5, -0.5};
  EXPECT_DOUBLE_EQ(trace_norm(HermitianOperator(ComplexMatrix::diagonal(d))), 1.0);
  const DensityMatrix rho = DensityMatrix::maximally_mixed({2, 2});
  EXPECT_EQ(trace_norm(rho.op() - rho.op()), 0.0);
}

TEST(TraceNorm, LocalBlochDifference) {
  // 1/4 (x . sigma (x) 1 + 1 (x) y . sigma), x = (0.2,0,0), y = (0,0.1,0).
  ComplexMatrix m = 0.2 * kron(pauli(1), pauli(0)) + 0.1 * kron(pauli(0), pauli(2));
  m *= 0.25;
  EXPECT_NEAR(trace_norm(HermitianOperator(m)), 0.2, 1e-12);
}

TEST(TraceNorm, TriangleInequalityAndUnitaryInvariance) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianOperator a = random_hermitian(4, rng);
    const HermitianOperator b = random_hermitian(4, rng);
    const HermitianOperator c = random_hermitian(4, rng);
    EXPECT_LE(trace_norm(a - c), trace_norm(a - b) + trace_norm(b - c) + 1e-9);
    const ComplexMatrix u = random_unitary(4, rng);
    EXPECT_NEAR(trace_norm(a.conjugated_by(u)), trace_norm(a), 1e-9);
    EXPECT_NEAR(trace_norm(a), testing::eigen_trace_norm(a), 1e-10);
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
  const std::array<double, 4> zz{1, -1, -1, 1};
  EXPECT_EQ(kron(pauli(3), pauli(3)), ComplexMatrix::diagonal(zz));

  const Complex i(0, 1);
  const ComplexMatrix xy = kron(pauli(1), pauli(2));
  const ComplexMatrix expected(4, 4, {0, 0, 0, -i,  //
                                      0, 0, i, 0,   //
                                      0, -i, 0, 0,  //
                                      i, 0, 0, 0});
  EXPECT_EQ(xy, expected);
  EXPECT_EQ(xy, xy.adjoint());
}

TEST(Kron, RectangularShapes) {
  const ComplexMatrix a(2, 3);
  const ComplexMatrix b(1, 4);
  const ComplexMatrix k = kron(a, b);
  EXPECT_EQ(k.rows(), 2u);
  EXPECT_EQ(k.cols(), 12u);
}

TEST(PartialTranspose, ProductStateStaysPositive) {
  const DensityMatrix p = testing::qubit_product(testing::qubit_state(0.3, 0.4, 0.1), testing::qubit_state(0, 0.6, 0.6));
  const std::array<std::size_t, 2> dims{2, 2};
  const HermitianOperator pt = partial_transpose(p.op(), dims, 1);
  const ComplexMatrix expected =
      kron(testing::qubit_state(0.3, 0.4, 0.1), testing::qubit_state(0, 0.6, 0.6).transpose());
  EXPECT_LE(max_abs_diff(pt.matrix(), expected), 1e-15);
  EXPECT_GE(eig_hermitian(pt).min(), -1e-15);
  const HermitianOperator pta = partial_transpose(p.op(), dims, 0);
  EXPECT_LE(max_abs_diff(pta.matrix(), kron(testing::qubit_state(0.3, 0.4, 0.1).transpose(),
                                            testing::qubit_state(0, 0.6, 0.6))),
            1e-15);
}

TEST(PartialTranspose, PhiPlusHasNegativeEigenvalue) {
  const DensityMatrix phi = bell_states()[0];
  const std::array<std::size_t, 2> dims{2, 2};
  const HermitianOperator pt = partial_transpose(phi.op(), dims, 1);
  // Oracle: the partial transpose of |phi+><phi+| is half the swap operator.
  ComplexMatrix swap(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  swap *= 0.5;
  EXPECT_LE(max_abs_diff(pt.matrix(), swap), 1e-15);
  EXPECT_NEAR(eigen_eigenvalues(pt.matrix()).front(), -0.5, 1e-12);
  EXPECT_NEAR(eig_hermitian(pt).min(), -0.5, 1e-12);
}

TEST(PartialTranspose, IdentityFixedAndInvolution) {
  const std::array<std::size_t, 2> dims{2, 2};
  const DensityMatrix mm = DensityMatrix::maximally_mixed({2, 2});
  EXPECT_EQ(partial_transpose(mm.op(), dims, 0).matrix(), mm.matrix());
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::array<std::size_t, 2> d{trial % 2 == 0 ? 2u : 4u, 2};
    const HermitianOperator h = random_hermitian(d[0] * d[1], rng);
    for (std::size_t sys = 0; sys < 2; ++sys) {
      const HermitianOperator pt = partial_transpose(h, d, sys);
      EXPECT_NEAR(pt.trace(), h.trace(), 1e-14);
      EXPECT_LE(max_abs_diff(pt.matrix(), pt.matrix().adjoint()), 1e-14);
      EXPECT_LE(max_abs_diff(partial_transpose(pt, d, sys).matrix(), h.matrix()), 1e-14);
    }
  }
}

TEST(PartialTranspose, RejectsBadDims) {
  const std::array<std::size_t, 2> dims{2, 3};
  EXPECT_THROW(partial_transpose(HermitianOperator::identity(4), dims, 0), ValidationError);
  const std::array<std::size_t, 2> ok{2, 2};
  EXPECT_THROW(partial_transpose(HermitianOperator::identity(4), ok, 2), ValidationError);
}

TEST(SupportInvSqrt, MaximallyMixed) {
  const SupportInverseSqrt s = support_inv_sqrt(DensityMatrix::maximally_mixed({2, 2}).op());
  EXPECT_LE(max_abs_diff(s.inv_sqrt.matrix(), ComplexMatrix::identity(4) * 2.0), 1e-12);
  EXPECT_LE(max_abs_diff(s.projector.matrix(), ComplexMatrix::identity(4)), 1e-12);
  EXPECT_EQ(s.rank, 4u);
}

TEST(SupportInvSqrt, RankDeficientDiagonal) {
  const std::array<double, 4> d{0.5, 0.5, 0, 0};
  const SupportInverseSqrt s = support_inv_sqrt(HermitianOperator(ComplexMatrix::diagonal(d)));
  const std::array<double, 4> inv{kSqrt2, kSqrt2, 0, 0};
  const std::array<double, 4> proj{1, 1, 0, 0};
  EXPECT_LE(max_abs_diff(s.inv_sqrt.matrix(), ComplexMatrix::diagonal(inv)), 1e-12);
  EXPECT_LE(max_abs_diff(s.projector.matrix(), ComplexMatrix::diagonal(proj)), 1e-12);
  EXPECT_EQ(s.rank, 2u);
}

TEST(SupportInvSqrt, RandomRankTwoSelfConsistency) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix sigma = random_density(4, 2, rng, {2, 2});
    const SupportInverseSqrt s = support_inv_sqrt(sigma.op());
    EXPECT_EQ(s.rank, 2u);
    const ComplexMatrix& p = s.projector.matrix();
    const ComplexMatrix lhs = p * s.inv_sqrt.matrix() * sigma.matrix() * s.inv_sqrt.matrix() * p;
    EXPECT_LE(max_abs_diff(lhs, p), 1e-9);
  }
}

TEST(SupportInvSqrt, RefusesAmbiguousRank) {
  const std::array<double, 3> d{0.5, 0.5 - 1e-10, 1e-10};
  EXPECT_THROW(support_inv_sqrt(HermitianOperator(ComplexMatrix::diagonal(d))), IllConditionedError);
  EXPECT_THROW(support_inv_sqrt(HermitianOperator::identity(2), 0.0), ValidationError);
}

TEST(SingularValues3x3, MatchesEigen) {
  Rng rng(23);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    std::array<std::array<double, 3>, 3> m{};
    Eigen::Matrix3d e;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) e(r, c) = m[r][c] = g(rng);
    const auto sv = singular_values_3x3(m);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(e);
    const Eigen::Vector3d ref = svd.singularValues();  // descending
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(sv[k], ref(2 - k), 1e-12);
  }
}

}  // namespace
}  // namespace robustlab
