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

#include "icoheat/ico.hpp"

#include <cmath>
#include <limits>

namespace icoheat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must lie in [0, 1]");
  }
}

void require_qubit_pair(const KrausChannel& ch1, const KrausChannel& ch2, const char* where) {
  if (ch1.ops.empty() || ch2.ops.empty()) {
    throw Error(ErrorKind::kInvalidArgument, std::string(where) + ": channel without operators");
  }
  if (ch1.dim() != 2 || ch2.dim() != 2) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(where) + ": qubit channels required");
  }
}

const ComplexMatrix& control_zero() {
  static const ComplexMatrix m = ComplexMatrix::ket_bra(2, 0, 0);
  return m;
}

const ComplexMatrix& control_one() {
  static const ComplexMatrix m = ComplexMatrix::ket_bra(2, 1, 1);
  return m;
}

// <s|_c joint |s>_c for |s> = (|0> + sign |1>)/sqrt(2), joint on control (x) system.
ComplexMatrix control_block(const ComplexMatrix& joint, double sign) {
  const std::size_t d = joint.dim() / 2;
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      out(r, c) = 0.5 * (joint(r, c) + sign * joint(r, d + c) + sign * joint(d + r, c) +
                         joint(d + r, d + c));
    }
  }
  return out;
}

}  // namespace

ControlState::ControlState(double alpha) : alpha_(alpha) {
  require_unit_interval(alpha, "ControlState: alpha");
}

double ControlState::coherence() const noexcept { return std::sqrt(alpha_ * (1.0 - alpha_)); }

DensityMatrix ControlState::density() const {
  const Complex ket[] = {std::sqrt(alpha_), std::sqrt(1.0 - alpha_)};
  return DensityMatrix::pure(ket);
}

KrausChannel switch_kraus(const KrausChannel& ch1, const KrausChannel& ch2) {
  require_qubit_pair(ch1, ch2, "switch_kraus");
  KrausChannel out;
  out.label = "switch(" + ch1.label + ", " + ch2.label + ")";
  out.ops.reserve(ch1.ops.size() * ch2.ops.size());
  for (const auto& k1 : ch1.ops) {
    for (const auto& k2 : ch2.ops) {
      out.ops.push_back(kron(control_zero(), k1 * k2) + kron(control_one(), k2 * k1));
    }
  }
  return out;
}

KrausChannel coherent_control_kraus(const KrausChannel& ch1, const KrausChannel& ch2) {
  require_qubit_pair(ch1, ch2, "coherent_control_kraus");
  if (ch1.ops.size() != ch2.ops.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "coherent_control_kraus: channels must have equally many operators");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(ch1.ops.size()));
  KrausChannel out;
  out.label = "coherent(" + ch1.label + ", " + ch2.label + ")";
  for (const auto& k2 : ch2.ops) {
    for (const auto& k1 : ch1.ops) {
      out.ops.push_back(scale * (kron(control_zero(), k1) + kron(control_one(), k2)));
    }
  }
  return out;
}

SwitchOutcome measure_control(const ComplexMatrix& joint) {
  if (joint.dim() < 2 || joint.dim() % 2 != 0) {
    throw Error(ErrorKind::kDimensionMismatch, "measure_control: expected control (x) system");
  }
  SwitchOutcome out;
  auto project = [](const ComplexMatrix& block, std::optional<DensityMatrix>& state,
                    double& prob, double& pop) {
    prob = block.trace().real();
    if (prob > kImpossibleProbability) {
      state.emplace(block * Complex(1.0 / prob));
      pop = state->excited_population();
    } else {
      pop = kNaN;
    }
  };
  project(control_block(joint, +1.0), out.rho_plus, out.p_plus, out.f_plus);
  project(control_block(joint, -1.0), out.rho_minus, out.p_minus, out.f_minus);
  return out;
}

ComplexMatrix switch_joint_state(double f1, const ControlState& ctrl, double p) {
  require_unit_interval(f1, "run_switch: f1");
  require_unit_interval(p, "run_switch: p");
  const KrausChannel thermal = make_thermalizing(p);
  const KrausChannel sw = switch_kraus(thermal, thermal);
  const ComplexMatrix input =
      kron(ctrl.density().matrix(), DensityMatrix::qubit_diagonal(f1).matrix());
  return apply_kraus(sw.ops, input);
}

SwitchOutcome run_switch(double f1, const ControlState& ctrl, double p) {
  return measure_control(switch_joint_state(f1, ctrl, p));
}

SwitchPopulations switch_closed_form(double f1, const ControlState& ctrl, double p) {
  require_unit_interval(f1, "switch_closed_form: f1");
  require_unit_interval(p, "switch_closed_form: p");
  const double c = ctrl.coherence();
  const double interference = (1.0 - f1) * (1.0 - p) * (1.0 - p) + f1 * p * p;
  SwitchPopulations out;
  out.p_plus = 0.5 + c * interference;
  out.p_minus = 0.5 - c * interference;
  const double excited_plus = p + 2.0 * c * f1 * p * p;
  const double excited_minus = p - 2.0 * c * f1 * p * p;
  out.f_plus = out.p_plus > kImpossibleProbability ? excited_plus / (2.0 * out.p_plus) : kNaN;
  out.f_minus = out.p_minus > kImpossibleProbability ? excited_minus / (2.0 * out.p_minus) : kNaN;
  return out;
}

ClassicalHeat classical_heat(double f1, double p, double omega) {
  require_unit_interval(f1, "classical_heat: f1");
  require_unit_interval(p, "classical_heat: p");
  const double dq = 0.5 * omega * (p - f1);
  return {dq, dq};
}

SwitchOutcome coherent_control(double f1, const ControlState& ctrl, double p) {
  require_unit_interval(f1, "coherent_control: f1");
  require_unit_interval(p, "coherent_control: p");
  const KrausChannel thermal = make_thermalizing(p);
  const KrausChannel cc = coherent_control_kraus(thermal, thermal);
  const ComplexMatrix input =
      kron(ctrl.density().matrix(), DensityMatrix::qubit_diagonal(f1).matrix());
  return measure_control(apply_kraus(cc.ops, input));
}

}  // namespace icoheat
