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

#include "robustlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "robustlab/error.hpp"

namespace robustlab {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    std::ostringstream os;
    os << "ComplexMatrix: expected " << rows * cols << " entries, got "
       << data_.size();
    throw ValidationError(os.str());
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u,
                                   std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValidationError("ComplexMatrix: shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValidationError("ComplexMatrix: shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("ComplexMatrix: shape mismatch in *");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

// --- HermitianOperator ------------------------------------------------------

HermitianOperator::HermitianOperator(ComplexMatrix m, const Tolerances& tol) {
  if (!m.is_square() || m.rows() == 0)
    throw ValidationError("HermitianOperator: matrix must be square and non-empty");
  const double scale = std::max(1.0, m.max_abs());
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Complex d = m(i, j) - std::conj(m(j, i));
      if (std::abs(d) > tol.hermiticity * scale) {
        std::ostringstream os;
        os << "HermitianOperator: entry (" << i << "," << j
           << ") violates self-adjointness by " << std::abs(d);
        throw ValidationError(os.str());
      }
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = h;
      m(j, i) = std::conj(h);
    }
  m_ = std::move(m);
}

HermitianOperator HermitianOperator::identity(std::size_t n) {
  return HermitianOperator(Unchecked{}, ComplexMatrix::identity(n));
}

HermitianOperator HermitianOperator::zero(std::size_t n) {
  return HermitianOperator(Unchecked{}, ComplexMatrix(n, n));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  m_ += o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
  m_ -= o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianOperator HermitianOperator::conjugated_by(const ComplexMatrix& u) const {
  return HermitianOperator(u * m_ * u.adjoint());
}

// --- eigensolver ------------------------------------------------------------

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary U = diag-phase * real rotation acting
// on columns p, q. A <- U^dagger A U, V <- V U.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  // Columns of U restricted to (p, q).
  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * std::conj(phase);
  const Complex uqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

Spectrum eig_hermitian(const HermitianOperator& h, const Tolerances& tol) {
  const std::size_t n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold =
      tol.jacobi_off_diagonal * std::max(1.0, a.frobenius_norm());
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
    if (off_diagonal_mass(a) < threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double trace_norm(const HermitianOperator& h, const Tolerances& tol) {
  double s = 0.0;
  for (double l : eig_hermitian(h, tol).eigenvalues) s += std::abs(l);
  return s;
}

HermitianOperator partial_transpose(const HermitianOperator& h,
                                    std::span<const std::size_t> dims,
                                    std::size_t subsystem) {
  if (dims.size() != 2 || dims[0] * dims[1] != h.dim())
    throw ValidationError("partial_transpose: dims must be [dA, dB] with dA*dB = D");
  if (subsystem > 1) throw ValidationError("partial_transpose: subsystem must be 0 (A) or 1 (B)");
  const std::size_t da = dims[0];
  const std::size_t db = dims[1];
  const ComplexMatrix& m = h.matrix();
  ComplexMatrix out(h.dim(), h.dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          const Complex e = m(i * db + j, k * db + l);
          if (subsystem == 1)
            out(i * db + l, k * db + j) = e;
          else
            out(k * db + j, i * db + l) = e;
        }
  return HermitianOperator(std::move(out));
}

SupportInverseSqrt support_inv_sqrt(const HermitianOperator& sigma, double cutoff,
                                    const Tolerances& tol) {
  if (!(cutoff > 0)) throw ValidationError("support_inv_sqrt: cutoff must be positive");
  const Spectrum s = eig_hermitian(sigma, tol);
  std::size_t rank = 0;
  for (double l : s.eigenvalues) {
    if (l > cutoff / 10 && l < cutoff * 10) {
      std::ostringstream os;
      os << "support_inv_sqrt: eigenvalue " << l << " too close to cutoff " << cutoff
         << " to decide the support";
      throw IllConditionedError(os.str());
    }
    if (l > cutoff) ++rank;
  }
  SupportInverseSqrt out{
      spectral_map(s, [&](double l) { return l > cutoff ? 1.0 / std::sqrt(l) : 0.0; }),
      spectral_map(s, [&](double l) { return l > cutoff ? 1.0 : 0.0; }), rank};
  return out;
}

const ComplexMatrix& pauli(int index) {
  static const ComplexMatrix kPaulis[4] = {
      ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}),
      ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}),
      ComplexMatrix(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}),
      ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}),
  };
  if (index < 0 || index > 3) throw ValidationError("pauli: index must be 0..3");
  return kPaulis[index];
}

std::array<double, 3> singular_values_3x3(const std::array<std::array<double, 3>, 3>& m) {
  // Columns of the working copy are orthogonalised pairwise; their norms are
  // then the singular values.
  std::array<std::array<double, 3>, 3> a = m;
  auto col_dot = [&](int p, int q) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += a[i][p] * a[i][q];
    return s;
  };
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        const double alpha = col_dot(p, p);
        const double beta = col_dot(q, q);
        const double gamma = col_dot(p, q);
        if (gamma == 0.0) continue;
        off = std::max(off, std::abs(gamma) / std::sqrt(alpha * beta));
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < 3; ++i) {
          const double ap = a[i][p];
          const double aq = a[i][q];
          a[i][p] = c * ap - s * aq;
          a[i][q] = s * ap + c * aq;
        }
      }
    if (off < 1e-15) break;
  }
  std::array<double, 3> sv{};
  for (int k = 0; k < 3; ++k) sv[k] = std::sqrt(col_dot(k, k));
  std::sort(sv.begin(), sv.end());
  return sv;
}

}  // namespace robustlab
