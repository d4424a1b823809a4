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
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "robustlab/tolerances.hpp"

namespace robustlab {

using Complex = std::complex<double>;

/// Largest operator dimension the library is tuned for.
inline constexpr std::size_t kMaxDim = 8;

/// Dense row-major complex matrix. All entries are finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of `entries` (row-major). Throws ValidationError if the
  /// count does not match or an entry is not finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);
  /// Outer product |u><v|.
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tensor product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square self-adjoint matrix. Construction checks |M - M^dagger| entrywise
/// against the hermiticity tolerance (scaled by max(1, max|M_ij|)) and then
/// stores the exact Hermitian part.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(ComplexMatrix m,
                             const Tolerances& tol = kDefaultTolerances);

  static HermitianOperator identity(std::size_t n);
  static HermitianOperator zero(std::size_t n);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator& operator+=(const HermitianOperator& o);
  HermitianOperator& operator-=(const HermitianOperator& o);
  HermitianOperator& operator*=(double s);
  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

  /// U H U^dagger.
  HermitianOperator conjugated_by(const ComplexMatrix& u) const;

 private:
  struct Unchecked {};
  HermitianOperator(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Eigenvalues ascending; eigenvectors stored as the matching columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Cyclic complex Jacobi rotations, stopping once the off-diagonal Frobenius
/// mass drops below tol.jacobi_off_diagonal * max(1, |H|_F).
Spectrum eig_hermitian(const HermitianOperator& h,
                       const Tolerances& tol = kDefaultTolerances);

/// Sum of |eigenvalues|.
double trace_norm(const HermitianOperator& h,
                  const Tolerances& tol = kDefaultTolerances);

/// Partial transpose of the `subsystem` factor (0 = A, 1 = B) of an operator
/// on C^{dims[0]} (x) C^{dims[1]}.
HermitianOperator partial_transpose(const HermitianOperator& h,
                                    std::span<const std::size_t> dims,
                                    std::size_t subsystem);

struct SupportInverseSqrt {
  HermitianOperator inv_sqrt;  ///< sigma^{-1/2} restricted to the support
  HermitianOperator projector;  ///< projector onto the support
  std::size_t rank = 0;
};

/// Pseudo-inverse square root. Eigenvalues above `cutoff` are inverted,
/// others zeroed. Throws IllConditionedError when an eigenvalue lies in
/// (cutoff / 10, cutoff * 10).
SupportInverseSqrt support_inv_sqrt(const HermitianOperator& sigma,
                                    double cutoff = kDefaultTolerances.support_cutoff,
                                    const Tolerances& tol = kDefaultTolerances);

/// Function of a Hermitian operator through its spectrum.
template <class F>
HermitianOperator spectral_map(const Spectrum& s, F&& f);

/// Pauli matrices; index 0 is the identity.
const ComplexMatrix& pauli(int index);

/// Singular values of a real 3x3 matrix, ascending, via one-sided Jacobi
/// (accurate for tiny singular values).
std::array<double, 3> singular_values_3x3(const std::array<std::array<double, 3>, 3>& m);

// ---------------------------------------------------------------------------

template <class F>
HermitianOperator spectral_map(const Spectrum& s, F&& f) {
  const std::size_t n = s.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(s.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = s.eigenvectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += vik * std::conj(s.eigenvectors(j, k));
      }
    }
  }
  return HermitianOperator(std::move(out));
}

}  // namespace robustlab
