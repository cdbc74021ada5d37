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

#include "icoheat/sampling.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace icoheat {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Complex Sampler::gaussian_complex() {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(engine_);
  const double im = n(engine_);
  return {re, im};
}

DensityMatrix Sampler::random_density(std::size_t dim) {
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = gaussian_complex();
  }
  ComplexMatrix m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  // Symmetrize away rounding so the Hermiticity check is exact.
  ComplexMatrix herm = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(herm));
}

DensityMatrix Sampler::random_pure(std::size_t dim) {
  std::vector<Complex> ket(dim);
  for (auto& z : ket) z = gaussian_complex();
  return DensityMatrix::pure(ket);
}

DensityMatrix Sampler::random_thermal_qubit() {
  return DensityMatrix::qubit_diagonal(uniform(0.0, 0.5));
}

KrausChannel Sampler::random_channel(std::size_t dim, std::size_t n_ops) {
  const auto d = static_cast<Eigen::Index>(dim);
  const auto n = static_cast<Eigen::Index>(n_ops);
  Eigen::MatrixXcd stack(n * d, d);
  for (Eigen::Index r = 0; r < n * d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) stack(r, c) = gaussian_complex();
  }
  const Eigen::MatrixXcd gram = stack.adjoint() * stack;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  const Eigen::VectorXd inv_sqrt = solver.eigenvalues().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXcd whiten =
      solver.eigenvectors() * inv_sqrt.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
  const Eigen::MatrixXcd iso = stack * whiten;

  KrausChannel ch;
  ch.label = "random";
  for (Eigen::Index k = 0; k < n; ++k) {
    ComplexMatrix op(dim);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) {
        op(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = iso(k * d + r, c);
      }
    }
    ch.ops.push_back(std::move(op));
  }
  return ch;
}

}  // namespace icoheat
