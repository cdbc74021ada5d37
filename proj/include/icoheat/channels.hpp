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

#ifndef ICOHEAT_CHANNELS_HPP
#define ICOHEAT_CHANNELS_HPP

#include "icoheat/qmat.hpp"

namespace icoheat {

// Qubit basis convention used throughout: index 0 is the excited state |e>
// (horizontal polarization |H>), index 1 is the ground state |g> (|V>).
inline constexpr std::size_t kExcited = 0;
inline constexpr std::size_t kGround = 1;

/// Excited-state population of a qubit with splitting omega at the given
/// temperature, 1 / (1 + exp(omega / T)). T = 0 gives 0, T = +inf gives 1/2.
double thermal_population(double omega, double temperature);

/// Level splitting and bath temperature (hbar = k_B = 1).
class ThermalParams {
 public:
  /// Requires omega > 0 and temperature >= 0 (+inf allowed).
  ThermalParams(double omega, double temperature);

  double omega() const noexcept { return omega_; }
  double temperature() const noexcept { return temperature_; }
  double excited_population() const noexcept { return population_; }

 private:
  double omega_;
  double temperature_;
  double population_;
};

/// Generalized amplitude damping with excitation probability p and interaction
/// strength r. Operator order: E0, E1 (excitation), E2, E3 (relaxation).
KrausChannel make_gad(double p, double r);

/// Thermalizing channel rho -> diag(p, 1 - p): K0 = sqrt(p)|e><e|, K1 = sqrt(p)|e><g|,
/// K2 = sqrt(1-p)|g><g|, K3 = sqrt(1-p)|g><e|. Any p in [0, 1] is accepted;
/// p > 1/2 stands for a negative-temperature bath.
KrausChannel make_thermalizing(double p);
KrausChannel make_thermalizing(const ThermalParams& params);

/// Constant channel with output tau: operators sqrt(tau)|m><n| for m, n in the
/// computational basis, ordered with n varying fastest.
KrausChannel make_constant(const DensityMatrix& tau);

KrausChannel identity_channel(std::size_t dim = 2);

struct CptpCheck {
  bool ok = false;
  /// max entrywise |sum K^dagger K - I|.
  double deviation = 0.0;
};

/// Completeness check. An empty operator list is treated as a qubit map with
/// sum K^dagger K = 0, so it fails with deviation 1.
CptpCheck validate_cptp(const KrausChannel& ch, double tol = kAlgebraTol);

}  // namespace icoheat

#endif  // ICOHEAT_CHANNELS_HPP
