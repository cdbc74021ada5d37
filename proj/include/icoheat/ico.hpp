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

#ifndef ICOHEAT_ICO_HPP
#define ICOHEAT_ICO_HPP

#include <optional>

#include "icoheat/channels.hpp"
#include "icoheat/qmat.hpp"

namespace icoheat {

/// Pure control qubit sqrt(alpha)|0> + sqrt(1 - alpha)|1>.
class ControlState {
 public:
  explicit ControlState(double alpha);

  /// |+>_c, alpha = 1/2.
  static ControlState plus() { return ControlState(0.5); }

  double alpha() const noexcept { return alpha_; }
  /// sqrt(alpha (1 - alpha)), the coherence magnitude of the control.
  double coherence() const noexcept;
  DensityMatrix density() const;

 private:
  double alpha_;
};

/// Result of measuring the control in the {|+>, |->} basis.
/// A state is absent when its outcome probability is at or below
/// kImpossibleProbability; its population is then NaN.
struct SwitchOutcome {
  std::optional<DensityMatrix> rho_plus;
  std::optional<DensityMatrix> rho_minus;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double f_plus = 0.0;
  double f_minus = 0.0;
};

/// Outcome probabilities and conditional excited populations in closed form.
struct SwitchPopulations {
  double p_plus = 0.0;
  double p_minus = 0.0;
  double f_plus = 0.0;
  double f_minus = 0.0;
};

/// Quantum switch of two channels on the control (x) system space:
///   W_ij = |0><0| (x) K1^i K2^j + |1><1| (x) K2^j K1^i,
/// ordered with j varying fastest (index i * n2 + j). Vanishing operators are kept,
/// so a pair of four-operator channels always yields sixteen entries.
KrausChannel switch_kraus(const KrausChannel& ch1, const KrausChannel& ch2);

/// Coherently controlled channel choice with operators
///   M_ij = (|0><0| (x) K1^j + |1><1| (x) K2^i) / sqrt(n),
/// where both channels have n operators. The 1/sqrt(n) factor restores completeness.
KrausChannel coherent_control_kraus(const KrausChannel& ch1, const KrausChannel& ch2);

/// Projects the control of a control (x) system state onto |+> and |->.
SwitchOutcome measure_control(const ComplexMatrix& joint);

/// rho_c (x) rho_S^0 evolved through the switch of two thermalizing channels with
/// parameter p, for a system with excited population f1.
ComplexMatrix switch_joint_state(double f1, const ControlState& ctrl, double p);

/// Full 16-operator density-matrix evolution followed by control measurement.
SwitchOutcome run_switch(double f1, const ControlState& ctrl, double p);

/// Closed-form probabilities and populations of the switch outcomes:
///   P+- = 1/2 +- c [(1 - f1)(1 - p)^2 + f1 p^2],
///   f+- = [p +- 2 c f1 p^2] / (2 P+-),  with c = sqrt(alpha (1 - alpha)).
/// Populations of impossible outcomes are NaN.
SwitchPopulations switch_closed_form(double f1, const ControlState& ctrl, double p);

/// Heat per outcome when the channels act in a definite order, 1/2 omega (p - f1) each.
struct ClassicalHeat {
  double dq_plus = 0.0;
  double dq_minus = 0.0;
};
ClassicalHeat classical_heat(double f1, double p, double omega);

/// Coherent control of two thermalizing channels followed by control measurement.
SwitchOutcome coherent_control(double f1, const ControlState& ctrl, double p);

}  // namespace icoheat

#endif  // ICOHEAT_ICO_HPP
