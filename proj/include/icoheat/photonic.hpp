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

#ifndef ICOHEAT_PHOTONIC_HPP
#define ICOHEAT_PHOTONIC_HPP

#include <array>
#include <vector>

#include "icoheat/ico.hpp"
#include "icoheat/qmat.hpp"

namespace icoheat {

// Polarization encoding: |H> = |e> (index 0), |V> = |g> (index 1).

enum class PlateKind { kHalfWave, kQuarterWave };

struct WavePlateSetting {
  PlateKind kind = PlateKind::kHalfWave;
  double theta = 0.0;  ///< fast-axis angle, radians

  ComplexMatrix jones() const;
};

/// [[cos 2t, sin 2t], [sin 2t, -cos 2t]]
ComplexMatrix hwp(double theta);
/// [[cos^2 t + i sin^2 t, (1 - i) sin t cos t], [(1 - i) sin t cos t, sin^2 t + i cos^2 t]]
ComplexMatrix qwp(double theta);

/// diag(exp(-i alpha/2), exp(i alpha/2)).
ComplexMatrix jones_rz(double alpha);

/// QWP@pi/4, HWP@alpha/2, HWP@alpha/4, QWP@-pi/4 in matrix-product order
/// (the light meets the last entry first).
std::array<WavePlateSetting, 4> rz_wave_plates(double alpha);

/// Product of rz_wave_plates(alpha). Equals jones_rz(alpha) up to a global phase.
ComplexMatrix rz_from_wave_plates(double alpha);

/// min over phi of the trace norm of a - exp(i phi) b.
double phase_insensitive_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Jones rotation angle of a linear frequency ramp omega1 -> omega2 (or back)
/// lasting tau: the integral of omega(t), (omega1 + omega2) tau / 2.
double adiabat_angle(double omega1, double omega2, double tau);

/// HWP angle in [0, pi/4] that prepares excited population f1 = cos^2(2 theta).
double prep_angle(double f1);
/// cos^2(2 theta).
double prep_population(double theta);
/// |H> through HWP@theta followed by full dephasing in the H/V basis.
DensityMatrix prepare_thermal_state(double theta);

/// One row of the HWP settings that realize a thermalizing Kraus operator.
struct KrausAngleRow {
  int kraus_index = 0;
  std::array<double, 4> angles{};  ///< HWP1..HWP4, radians
  bool excitation = false;         ///< weight p when true, 1 - p otherwise

  double weight(double p) const { return excitation ? p : 1.0 - p; }
};

/// K0 -> (0, 0, pi/4, 0), K1 -> (pi/4, 0, pi/4, 0),
/// K2 -> (0, pi/4, 0, 0), K3 -> (pi/4, pi/4, 0, 0).
const std::array<KrausAngleRow, 4>& kraus_angle_table();

/// Net single-photon operator of the channel interferometer for one set of HWP angles:
///   HWP4 . HWP3 . F . Pi_H . HWP2 . HWP1,
/// where Pi_H is the polarizing beam splitter's transmitted (H) path and F = HWP@pi/4
/// is the H <-> V exchange picked up on the way to the output port.
/// Only the net operator is modeled, not the individual optical elements.
ComplexMatrix mzi_operator(const std::array<double, 4>& angles);

/// Thermalizing channel assembled from the table rows, each operator scaled by
/// sqrt(weight). Matches make_thermalizing(p) up to per-operator signs.
KrausChannel thermalizing_from_table(double p);

/// One of the sixteen separately run switch configurations.
struct BranchRun {
  std::size_t i = 0;  ///< Kraus index on channel 1
  std::size_t j = 0;  ///< Kraus index on channel 2
  double weight = 0.0;  ///< post-processing weight for the chosen p
  bool zero_operator = false;
  /// Joint control (x) system output of the unit-weight branch operator.
  ComplexMatrix output;
};

/// Runs every (i, j) pair of table-row operators without weights and records the
/// weight each branch receives in post-processing.
std::vector<BranchRun> run_switch_branches(double f1, const ControlState& ctrl, double p);

/// Weighted sum of the sixteen branch outputs followed by control measurement.
SwitchOutcome reconstruct_switch_state(double f1, double p, const ControlState& ctrl);

}  // namespace icoheat

#endif  // ICOHEAT_PHOTONIC_HPP
