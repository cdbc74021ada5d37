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

#ifndef ICOHEAT_OTTO_HPP
#define ICOHEAT_OTTO_HPP

#include <span>
#include <vector>

#include "icoheat/qmat.hpp"

namespace icoheat {

/// Four-stroke cycle with an indefinite-order isochore.
///
/// Stroke I compresses the frequency omega1 -> omega2 on the thermal state at
/// (omega1, t4). Stroke II passes the system through the quantum switch of two
/// thermalizing channels at t2 and keeps the |-> outcome (repeat until success).
/// Stroke III expands back to omega1 and stroke IV rethermalizes at t4.
struct OttoConfig {
  double omega1 = 1.0;
  double omega2 = 1.0;
  double t2 = 0.9;
  double t4 = 1.0;
  /// Temperature of the reservoir that absorbs the demon's erased memory.
  double t_r = 1.0;
  double alpha = 0.5;

  /// Throws Error(kInvalidArgument) unless omega2 >= omega1 > 0,
  /// 0 < t2 <= t4, t_r > 0 and alpha in [0, 1].
  void validate() const;
};

/// Energy ledger of one successful cycle. Work and heat are positive when
/// energy flows into the working qubit.
struct OttoReport {
  double ratio = 1.0;  ///< omega2 / omega1
  double f1 = 0.0;     ///< initial excited population at (omega1, t4)
  double f2 = 0.0;     ///< channel population at (omega2, t2)
  double f_minus = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double w1 = 0.0;
  double q2 = 0.0;
  double w3 = 0.0;
  double q4 = 0.0;
  double w_net = 0.0;
  double delta_s = 0.0;  ///< Shannon entropy of the measurement record, nats
  double w_era = 0.0;
  double cop = 0.0;
  /// Mean number of stroke-II attempts, 1 / P-.
  double expected_attempts = 0.0;
  /// Diagnostic only, not part of the COP: mean heat drawn from the T1 reset
  /// channel over the failed attempts of one cycle.
  double reset_heat = 0.0;
  bool possible = true;
};

/// Throws Error(kCycleImpossible) when P- <= kImpossibleProbability.
OttoReport run_cycle(const OttoConfig& cfg);

/// One report per ratio with omega2 = ratio * omega1. Ratios where the cycle
/// cannot run are returned with possible = false and NaN energetics.
std::vector<OttoReport> sweep_ratio(const OttoConfig& base, std::span<const double> ratios);

/// Mean of the geometric number of attempts until the |-> outcome, 1 / p_minus.
double expected_attempts(double p_minus);

/// Index of the largest finite COP, or reports.size() when none is finite.
std::size_t argmax_cop(std::span<const OttoReport> reports);

}  // namespace icoheat

#endif  // ICOHEAT_OTTO_HPP
