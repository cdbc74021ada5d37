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

#include "icoheat/unfolded.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "icoheat/channels.hpp"
#include "icoheat/ico.hpp"

namespace icoheat {

namespace {

std::size_t bit_of(std::size_t index, std::size_t n_qubits, std::size_t qubit) {
  return (index >> (n_qubits - 1 - qubit)) & 1U;
}

std::size_t flip_pair(std::size_t index, std::size_t n_qubits, std::size_t a, std::size_t b) {
  if (bit_of(index, n_qubits, a) == bit_of(index, n_qubits, b)) return index;
  return index ^ (std::size_t{1} << (n_qubits - 1 - a)) ^ (std::size_t{1} << (n_qubits - 1 - b));
}

void require_qubits(std::size_t n_qubits, std::initializer_list<std::size_t> qubits) {
  for (std::size_t q : qubits) {
    if (q >= n_qubits) throw Error(ErrorKind::kInvalidArgument, "gate: qubit index out of range");
  }
}

ComplexMatrix plus_minus_projector(double sign) {
  return ComplexMatrix{{0.5, 0.5 * sign}, {0.5 * sign, 0.5}};
}

// Conditional first-target states from an unnormalized block per outcome.
CswapOutcome normalize_outcomes(const ComplexMatrix& plus_block, const ComplexMatrix& minus_block) {
  CswapOutcome out;
  out.p_plus = plus_block.trace().real();
  out.p_minus = minus_block.trace().real();
  if (out.p_plus > kImpossibleProbability) out.rho_plus.emplace(plus_block * (1.0 / out.p_plus));
  if (out.p_minus > kImpossibleProbability) {
    out.rho_minus.emplace(minus_block * (1.0 / out.p_minus));
  }
  return out;
}

// Builds outcomes from (tau1 + tau2 +- X +- X^dagger) / 4 with trace weight (2 +- 2 Tr X) / 4.
CswapOutcome interference_outcomes(const DensityMatrix& tau1, const DensityMatrix& tau2,
                                   const ComplexMatrix& cross) {
  const ComplexMatrix base = tau1.matrix() + tau2.matrix();
  const ComplexMatrix sym = cross + cross.adjoint();
  return normalize_outcomes(0.25 * (base + sym), 0.25 * (base - sym));
}

void require_qubit_state(const DensityMatrix& m, const char* where) {
  if (m.dim() != 2) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(where) + ": qubit states required");
  }
}

void require_setup(const UnfoldSetup& s, const char* where) {
  require_qubit_state(s.tau1, where);
  require_qubit_state(s.tau2, where);
  require_qubit_state(s.rho, where);
  require_qubit_state(s.gamma, where);
}

}  // namespace

ComplexMatrix swap_gate(std::size_t n_qubits, std::size_t a, std::size_t b) {
  require_qubits(n_qubits, {a, b});
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i) u(flip_pair(i, n_qubits, a, b), i) = 1.0;
  return u;
}

ComplexMatrix controlled_swap_gate(std::size_t n_qubits, std::size_t a, std::size_t b,
                                   std::size_t control) {
  require_qubits(n_qubits, {a, b, control});
  if (control == a || control == b || a == b) {
    throw Error(ErrorKind::kInvalidArgument, "controlled_swap_gate: qubits must be distinct");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t j = bit_of(i, n_qubits, control) ? flip_pair(i, n_qubits, a, b) : i;
    u(j, i) = 1.0;
  }
  return u;
}

DensityMatrix switch_constant_closed_form(const UnfoldSetup& s) {
  require_setup(s, "switch_constant_closed_form");
  const ComplexMatrix& t1 = s.tau1.matrix();
  const ComplexMatrix& t2 = s.tau2.matrix();
  const ComplexMatrix& r = s.rho.matrix();
  const ComplexMatrix& g = s.gamma.matrix();
  ComplexMatrix out = g(0, 0) * kron(t1, ComplexMatrix::ket_bra(2, 0, 0));
  out += g(1, 1) * kron(t2, ComplexMatrix::ket_bra(2, 1, 1));
  out += g(0, 1) * kron(t1 * r * t2, ComplexMatrix::ket_bra(2, 0, 1));
  out += g(1, 0) * kron(t2 * r * t1, ComplexMatrix::ket_bra(2, 1, 0));
  return DensityMatrix(std::move(out));
}

DensityMatrix switch_constant_channels(const UnfoldSetup& s) {
  require_setup(s, "switch_constant_channels");
  const KrausChannel sw = switch_kraus(make_constant(s.tau1), make_constant(s.tau2));
  const ComplexMatrix control_first = apply_kraus(sw.ops, kron(s.gamma.matrix(), s.rho.matrix()));
  return DensityMatrix(conjugate(swap_gate(2, 0, 1), control_first));
}

DensityMatrix unfolded_circuit(const UnfoldSetup& s) {
  require_setup(s, "unfolded_circuit");
  constexpr std::size_t kE1 = 0, kE2 = 1, kT = 2, kC = 3;
  const ComplexMatrix input =
      kron(kron(s.tau2.matrix(), s.tau1.matrix()), kron(s.rho.matrix(), s.gamma.matrix()));
  const ComplexMatrix circuit = controlled_swap_gate(4, kE2, kT, kC) * swap_gate(4, kE1, kE2) *
                                controlled_swap_gate(4, kE1, kE2, kC);
  const ComplexMatrix output = conjugate(circuit, input);
  const std::array<std::size_t, 4> dims{2, 2, 2, 2};
  const std::array<std::size_t, 2> keep{kE1, kC};
  return DensityMatrix(partial_trace(output, dims, keep));
}

CswapOutcome cswap_two_qubit(const DensityMatrix& tau1, const DensityMatrix& tau2) {
  require_qubit_state(tau1, "cswap_two_qubit");
  require_qubit_state(tau2, "cswap_two_qubit");
  const ComplexMatrix input =
      kron(kron(tau1.matrix(), tau2.matrix()), plus_minus_projector(+1.0));
  const ComplexMatrix output = conjugate(controlled_swap_gate(3, 0, 1, 2), input);

  const std::array<std::size_t, 3> dims{2, 2, 2};
  const std::array<std::size_t, 1> keep{0};
  auto branch = [&](double sign) {
    const ComplexMatrix proj = kron(ComplexMatrix::identity(4), plus_minus_projector(sign));
    return partial_trace(proj * output * proj, dims, keep);
  };
  return normalize_outcomes(branch(+1.0), branch(-1.0));
}

CswapOutcome cswap_product_closed_form(const DensityMatrix& tau1, const DensityMatrix& tau2) {
  require_qubit_state(tau1, "cswap_product_closed_form");
  require_qubit_state(tau2, "cswap_product_closed_form");
  return interference_outcomes(tau1, tau2, tau1.matrix() * tau2.matrix());
}

CswapOutcome cswap_squared_closed_form(const DensityMatrix& tau1, const DensityMatrix& tau2) {
  require_qubit_state(tau1, "cswap_squared_closed_form");
  require_qubit_state(tau2, "cswap_squared_closed_form");
  return interference_outcomes(tau1, tau2, tau1.matrix() * tau1.matrix() * tau2.matrix());
}

CswapOutcome constant_switch_on_first(const DensityMatrix& tau1, const DensityMatrix& tau2) {
  const DensityMatrix plus = ControlState::plus().density();
  const DensityMatrix out = unfolded_circuit({tau1, tau2, tau1, plus});
  // The circuit output is system (x) control; measure_control expects control first.
  const SwitchOutcome sw = measure_control(conjugate(swap_gate(2, 0, 1), out.matrix()));
  CswapOutcome res;
  res.rho_plus = sw.rho_plus;
  res.rho_minus = sw.rho_minus;
  res.p_plus = sw.p_plus;
  res.p_minus = sw.p_minus;
  return res;
}

double outcome_distance(const CswapOutcome& a, const CswapOutcome& b) {
  double worst = std::max(std::abs(a.p_plus - b.p_plus), std::abs(a.p_minus - b.p_minus));
  auto compare = [&worst](const std::optional<DensityMatrix>& x,
                          const std::optional<DensityMatrix>& y) {
    if (x.has_value() != y.has_value()) {
      worst = std::numeric_limits<double>::infinity();
    } else if (x) {
      worst = std::max(worst, trace_distance(x->matrix(), y->matrix()));
    }
  };
  compare(a.rho_plus, b.rho_plus);
  compare(a.rho_minus, b.rho_minus);
  return worst;
}

}  // namespace icoheat
