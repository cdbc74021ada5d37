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

#ifndef ICOHEAT_SAMPLING_HPP
#define ICOHEAT_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "icoheat/qmat.hpp"

namespace icoheat {

/// Seeded source of random states and channels for randomized checks.
/// The same seed yields the same sequence on a given toolchain.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  Complex gaussian_complex();

  /// Ginibre-distributed mixed state, G G^dagger / Tr.
  DensityMatrix random_density(std::size_t dim);
  DensityMatrix random_pure(std::size_t dim);
  /// diag(f, 1 - f) with f uniform in [0, 1/2].
  DensityMatrix random_thermal_qubit();
  /// Random CPTP map with n_ops Kraus operators (isometry from a Ginibre stack).
  KrausChannel random_channel(std::size_t dim, std::size_t n_ops);

 private:
  std::mt19937_64 engine_;
};

}  // namespace icoheat

#endif  // ICOHEAT_SAMPLING_HPP
