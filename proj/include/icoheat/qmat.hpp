// Copyright 2026 The icoheat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICOHEAT_QMAT_HPP
#define ICOHEAT_QMAT_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace icoheat {

using Complex = std::complex<double>;

/// Entrywise tolerance for algebraic identities (completeness, trace, Hermiticity).
inline constexpr double kAlgebraTol = 1e-12;
/// Smallest eigenvalue accepted for a density matrix.
inline constexpr double kEigenTol = 1e-10;
/// Outcomes with probability at or below this are reported as impossible.
inline constexpr double kImpossibleProbability = 1e-14;

enum class ErrorKind {
  kDimensionMismatch,
  kInvalidArgument,
  kNotDensityMatrix,
  kImpossibleOutcome,
  kCycleImpossible,
};

const char* to_string(ErrorKind kind);

/// Error carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-major nested initializer; every row must have as many entries as there are rows.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  /// |row><col| in a dim-dimensional space.
  static ComplexMatrix ket_bra(std::size_t dim, std::size_t row, std::size_t col);
  /// |ket><bra|.
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// True when every entry is within tol of zero.
  bool is_zero(double tol = 0.0) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product; the left factor is the most significant subsystem.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij - conj(m_ji)|.
double hermiticity_deviation(const ComplexMatrix& m);

/// Ascending eigenvalues of the Hermitian part of m.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues below zero (within kEigenTol) are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Half the trace norm of the difference.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugates by a unitary: u m u^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

/// Returns an empty string when m satisfies the density-matrix invariants,
/// otherwise a description of the first violated one.
std::string density_matrix_violation(const ComplexMatrix& m);

/// A quantum state: Hermitian, unit trace, positive semidefinite (within tolerance).
class DensityMatrix {
 public:
  /// Validates; throws Error(kNotDensityMatrix) on violation.
  explicit DensityMatrix(ComplexMatrix m);

  /// Qubit state diag(excited, 1 - excited) in the (|e>, |g>) basis.
  static DensityMatrix qubit_diagonal(double excited);
  static DensityMatrix pure(std::span<const Complex> ket);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }
  const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  /// Weight on basis index 0, which is |e> for a qubit.
  double excited_population() const { return mat_(0, 0).real(); }

 private:
  ComplexMatrix mat_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// Partial trace keeping the listed subsystems (in ascending subsystem order).
/// dims lists every subsystem dimension with the most significant first.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// A map given by Kraus operators, rho -> sum_k K rho K^dagger.
struct KrausChannel {
  std::vector<ComplexMatrix> ops;
  std::string label;

  /// Dimension of the operators, 0 when there are none.
  std::size_t dim() const noexcept { return ops.empty() ? 0 : ops.front().dim(); }
};

/// sum_k K m K^dagger without any validation of the result.
ComplexMatrix apply_kraus(std::span<const ComplexMatrix> ops, const ComplexMatrix& m);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// Temperature of a qubit with excited population f and level splitting omega.
/// Returns 0 at f = 0, +inf at f = 1/2 and a negative value for f > 1/2.
double eff_temperature(double f, double omega);

}  // namespace icoheat

#endif  // ICOHEAT_QMAT_HPP
