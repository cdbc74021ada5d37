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

#include "icoheat/qmat.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace icoheat {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  return out;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hermitian_solver(const ComplexMatrix& m) {
  const Eigen::MatrixXcd e = to_eigen(m);
  const Eigen::MatrixXcd herm = 0.5 * (e + e.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(herm);
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << where << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "dimension mismatch";
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kNotDensityMatrix: return "not a density matrix";
    case ErrorKind::kImpossibleOutcome: return "impossible outcome";
    case ErrorKind::kCycleImpossible: return "cycle impossible";
  }
  return "unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorKind::kDimensionMismatch, "ComplexMatrix: entries length must be dim*dim");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw Error(ErrorKind::kDimensionMismatch, "ComplexMatrix: rows must form a square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::ket_bra(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) {
    throw Error(ErrorKind::kInvalidArgument, "ket_bra: index out of range");
  }
  ComplexMatrix m(dim);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "outer: ket and bra differ in length");
  }
  ComplexMatrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < bra.size(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_zero(double tol) const {
  return std::all_of(data_.begin(), data_.end(), [tol](Complex z) { return std::abs(z) <= tol; });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t ar = 0; ar < na; ++ar) {
    for (std::size_t ac = 0; ac < na; ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < nb; ++br) {
        for (std::size_t bc = 0; bc < nb; ++bc) out(ar * nb + br, ac * nb + bc) = s * b(br, bc);
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = r; c < m.dim(); ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.empty()) return {};
  const auto solver = hermitian_solver(m);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const auto solver = hermitian_solver(m);
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kEigenTol) {
      throw Error(ErrorKind::kNotDensityMatrix, "psd_sqrt: matrix has a negative eigenvalue");
    }
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  return from_eigen(v * ev.cast<Complex>().asDiagonal() * v.adjoint());
}

double trace_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  return svd.singularValues().sum();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * trace_norm(a - b);
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

std::string density_matrix_violation(const ComplexMatrix& m) {
  std::ostringstream msg;
  if (m.empty()) return "empty matrix";
  if (const double h = hermiticity_deviation(m); h > kAlgebraTol) {
    msg << "not Hermitian (deviation " << h << ")";
    return msg.str();
  }
  if (const Complex t = m.trace(); std::abs(t - 1.0) > kAlgebraTol) {
    msg << "trace " << t.real() << " differs from 1";
    return msg.str();
  }
  if (const double lo = hermitian_eigenvalues(m).front(); lo < -kEigenTol) {
    msg << "negative eigenvalue " << lo;
    return msg.str();
  }
  return {};
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (auto why = density_matrix_violation(mat_); !why.empty()) {
    throw Error(ErrorKind::kNotDensityMatrix, "DensityMatrix: " + why);
  }
}

DensityMatrix DensityMatrix::qubit_diagonal(double excited) {
  if (!(excited >= 0.0 && excited <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "qubit_diagonal: population outside [0, 1]");
  }
  return DensityMatrix(ComplexMatrix::diagonal({excited, 1.0 - excited}));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> ket) {
  const double norm2 = std::accumulate(ket.begin(), ket.end(), 0.0,
                                       [](double acc, Complex z) { return acc + std::norm(z); });
  if (norm2 <= 0.0) throw Error(ErrorKind::kInvalidArgument, "pure: zero vector");
  ComplexMatrix m = ComplexMatrix::outer(ket, ket);
  m *= 1.0 / norm2;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                            std::multiplies<>());
  if (dims.empty() || total != m.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "partial_trace: subsystem dims do not match matrix");
  }
  if (keep.empty()) throw Error(ErrorKind::kInvalidArgument, "partial_trace: nothing to keep");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size() || kept[k]) {
      throw Error(ErrorKind::kInvalidArgument, "partial_trace: bad keep index");
    }
    kept[k] = true;
  }

  // Strides of each subsystem inside the full index.
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t s = dims.size() - 1; s > 0; --s) stride[s - 1] = stride[s] * dims[s];

  std::vector<std::size_t> kept_dims;
  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (kept[s]) {
      kept_dims.push_back(s);
    } else {
      traced.push_back(s);
    }
  }
  const std::size_t out_dim = std::accumulate(
      kept_dims.begin(), kept_dims.end(), std::size_t{1},
      [&](std::size_t acc, std::size_t s) { return acc * dims[s]; });
  const std::size_t traced_dim = total / out_dim;

  // Offset in the full index contributed by a mixed-radix value over the given subsystems.
  auto offset = [&](const std::vector<std::size_t>& subsystems, std::size_t value) {
    std::size_t off = 0;
    for (std::size_t i = subsystems.size(); i-- > 0;) {
      const std::size_t s = subsystems[i];
      off += (value % dims[s]) * stride[s];
      value /= dims[s];
    }
    return off;
  };

  std::vector<std::size_t> kept_off(out_dim);
  for (std::size_t v = 0; v < out_dim; ++v) kept_off[v] = offset(kept_dims, v);
  std::vector<std::size_t> traced_off(traced_dim);
  for (std::size_t v = 0; v < traced_dim; ++v) traced_off[v] = offset(traced, v);

  ComplexMatrix out(out_dim);
  for (std::size_t r = 0; r < out_dim; ++r) {
    for (std::size_t c = 0; c < out_dim; ++c) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

ComplexMatrix apply_kraus(std::span<const ComplexMatrix> ops, const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (const auto& k : ops) {
    if (k.dim() != m.dim()) {
      throw Error(ErrorKind::kDimensionMismatch, "apply_kraus: operator and state dims differ");
    }
    out += k * m * k.adjoint();
  }
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_kraus(ch.ops, rho.matrix()));
}

double eff_temperature(double f, double omega) {
  if (f <= 0.0) return 0.0;
  if (f == 0.5) return std::numeric_limits<double>::infinity();
  return omega / std::log((1.0 - f) / f);
}

}  // namespace icoheat
