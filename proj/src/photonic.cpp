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

#include "icoheat/photonic.hpp"

#include <cmath>
#include <numbers>

#include "icoheat/channels.hpp"

namespace icoheat {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

ComplexMatrix unit_branch_operator(const ComplexMatrix& k1, const ComplexMatrix& k2) {
  return kron(ComplexMatrix::ket_bra(2, 0, 0), k1 * k2) +
         kron(ComplexMatrix::ket_bra(2, 1, 1), k2 * k1);
}

}  // namespace

ComplexMatrix WavePlateSetting::jones() const {
  return kind == PlateKind::kHalfWave ? hwp(theta) : qwp(theta);
}

ComplexMatrix hwp(double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  return ComplexMatrix{{c, s}, {s, -c}};
}

ComplexMatrix qwp(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex i(0.0, 1.0);
  const Complex off = (1.0 - i) * s * c;
  return ComplexMatrix{{c * c + i * s * s, off}, {off, s * s + i * c * c}};
}

ComplexMatrix jones_rz(double alpha) {
  return ComplexMatrix::diagonal({std::polar(1.0, -0.5 * alpha), std::polar(1.0, 0.5 * alpha)});
}

std::array<WavePlateSetting, 4> rz_wave_plates(double alpha) {
  return {{{PlateKind::kQuarterWave, kQuarterPi},
           {PlateKind::kHalfWave, alpha / 2.0},
           {PlateKind::kHalfWave, alpha / 4.0},
           {PlateKind::kQuarterWave, -kQuarterPi}}};
}

ComplexMatrix rz_from_wave_plates(double alpha) {
  ComplexMatrix out = ComplexMatrix::identity(2);
  for (const auto& plate : rz_wave_plates(alpha)) out = out * plate.jones();
  return out;
}

double phase_insensitive_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  // The overlap Tr[b^dagger a] fixes the best phase; for matrices that agree up
  // to phase this makes the difference vanish exactly.
  Complex overlap = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) overlap += std::conj(b(r, c)) * a(r, c);
  }
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return trace_norm(a - phase * b);
}

double adiabat_angle(double omega1, double omega2, double tau) {
  if (!(omega1 > 0.0 && omega2 > 0.0 && tau > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "adiabat_angle: inputs must be positive");
  }
  return 0.5 * (omega1 + omega2) * tau;
}

double prep_angle(double f1) {
  if (!(f1 >= 0.0 && f1 <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "prep_angle: f1 must lie in [0, 1]");
  }
  return 0.5 * std::acos(std::sqrt(f1));
}

double prep_population(double theta) {
  const double c = std::cos(2.0 * theta);
  return c * c;
}

DensityMatrix prepare_thermal_state(double theta) {
  const ComplexMatrix plate = hwp(theta);
  const Complex h = plate(0, 0);
  const Complex v = plate(1, 0);
  return DensityMatrix(ComplexMatrix::diagonal({std::norm(h), std::norm(v)}));
}

const std::array<KrausAngleRow, 4>& kraus_angle_table() {
  static const std::array<KrausAngleRow, 4> table{{
      {0, {0.0, 0.0, kQuarterPi, 0.0}, true},
      {1, {kQuarterPi, 0.0, kQuarterPi, 0.0}, true},
      {2, {0.0, kQuarterPi, 0.0, 0.0}, false},
      {3, {kQuarterPi, kQuarterPi, 0.0, 0.0}, false},
  }};
  return table;
}

ComplexMatrix mzi_operator(const std::array<double, 4>& angles) {
  const ComplexMatrix pass_h = ComplexMatrix::ket_bra(2, 0, 0);
  return hwp(angles[3]) * hwp(angles[2]) * hwp(kQuarterPi) * pass_h * hwp(angles[1]) *
         hwp(angles[0]);
}

KrausChannel thermalizing_from_table(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "thermalizing_from_table: p must lie in [0, 1]");
  }
  KrausChannel ch;
  ch.label = "thermalizing-table";
  for (const auto& row : kraus_angle_table()) {
    ch.ops.push_back(std::sqrt(row.weight(p)) * mzi_operator(row.angles));
  }
  return ch;
}

std::vector<BranchRun> run_switch_branches(double f1, const ControlState& ctrl, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "run_switch_branches: p must lie in [0, 1]");
  }
  const ComplexMatrix input =
      kron(ctrl.density().matrix(), DensityMatrix::qubit_diagonal(f1).matrix());
  const auto& table = kraus_angle_table();
  std::vector<BranchRun> runs;
  runs.reserve(table.size() * table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      const ComplexMatrix w =
          unit_branch_operator(mzi_operator(table[i].angles), mzi_operator(table[j].angles));
      BranchRun run;
      run.i = i;
      run.j = j;
      run.weight = table[i].weight(p) * table[j].weight(p);
      run.zero_operator = w.is_zero(kAlgebraTol);
      run.output = conjugate(w, input);
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

SwitchOutcome reconstruct_switch_state(double f1, double p, const ControlState& ctrl) {
  ComplexMatrix joint(4);
  for (const auto& run : run_switch_branches(f1, ctrl, p)) joint += run.weight * run.output;
  return measure_control(joint);
}

}  // namespace icoheat
