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

#ifndef ICOHEAT_UNFOLDED_HPP
#define ICOHEAT_UNFOLDED_HPP

#include <optional>

#include "icoheat/qmat.hpp"

namespace icoheat {

/// SWAP of qubits a and b in an n-qubit register (qubit 0 most significant).
ComplexMatrix swap_gate(std::size_t n_qubits, std::size_t a, std::size_t b);

/// Swaps qubits a and b when `control` is |1>, identity when it is |0>.
ComplexMatrix controlled_swap_gate(std::size_t n_qubits, std::size_t a, std::size_t b,
                                   std::size_t control);

/// Inputs of the switch of two constant channels: channel outputs tau1 and tau2,
/// target state rho and control state gamma.
struct UnfoldSetup {
  DensityMatrix tau1;
  DensityMatrix tau2;
  DensityMatrix rho;
  DensityMatrix gamma;
};

/// Output of the switch of constant channels on rho (x) gamma, as a
/// system (x) control state:
///   c00 tau1 (x) |0><0| + c11 tau2 (x) |1><1|
///     + c01 tau1 rho tau2 (x) |0><1| + c10 tau2 rho tau1 (x) |1><0|.
DensityMatrix switch_constant_closed_form(const UnfoldSetup& setup);

/// The same quantity from the 16 Kraus operators of switch_kraus applied to
/// the constant channels, reordered to system (x) control.
DensityMatrix switch_constant_channels(const UnfoldSetup& setup);

/// Circuit on (E1, E2, T, C), C least significant:
///   cSWAP(E1, E2; C), SWAP(E1, E2), cSWAP(E2, T; C), then trace out E2 and T.
/// E1 starts in tau2 and E2 in tau1, so the E1 (x) C output equals
/// switch_constant_closed_form on the same setup.
DensityMatrix unfolded_circuit(const UnfoldSetup& setup);

/// Control-conditioned state of the first target after a controlled SWAP.
struct CswapOutcome {
  std::optional<DensityMatrix> rho_plus;
  std::optional<DensityMatrix> rho_minus;
  double p_plus = 0.0;
  double p_minus = 0.0;
};

/// Three-qubit circuit: targets tau1, tau2 and control |+><+| (least significant),
/// one controlled SWAP, control measured in {|+>, |->}, second target discarded.
CswapOutcome cswap_two_qubit(const DensityMatrix& tau1, const DensityMatrix& tau2);

/// Exact output of cswap_two_qubit:
///   rho+- = (tau1 + tau2 +- tau1 tau2 +- tau2 tau1) / (2 (1 +- Tr[tau1 tau2])).
CswapOutcome cswap_product_closed_form(const DensityMatrix& tau1, const DensityMatrix& tau2);

/// rho+- = (tau1 + tau2 +- tau1^2 tau2 +- tau2 tau1^2) / (2 (1 +- Tr[tau1^2 tau2])).
/// This is the switch of the constant channels tau1, tau2 acting on a target
/// prepared in tau1 with control |+>; see constant_switch_on_first.
CswapOutcome cswap_squared_closed_form(const DensityMatrix& tau1, const DensityMatrix& tau2);

/// unfolded_circuit with rho = tau1 and gamma = |+><+|, control measured in {|+>, |->}.
CswapOutcome constant_switch_on_first(const DensityMatrix& tau1, const DensityMatrix& tau2);

/// Largest trace distance between corresponding conditional states, plus the
/// largest probability difference. Absent states must be absent in both.
double outcome_distance(const CswapOutcome& a, const CswapOutcome& b);

}  // namespace icoheat

#endif  // ICOHEAT_UNFOLDED_HPP
