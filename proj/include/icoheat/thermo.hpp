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

#ifndef ICOHEAT_THERMO_HPP
#define ICOHEAT_THERMO_HPP

#include <span>
#include <string_view>
#include <vector>

#include "icoheat/ico.hpp"

namespace icoheat {

/// Conditional heat at one channel temperature. Positive heat flows into the system.
struct HeatRecord {
  double te_over_ts = 0.0;
  double dq_plus = 0.0;
  double dq_minus = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double f_plus = 0.0;
  double f_minus = 0.0;
};

/// dQ+- = P+- omega (f+- - f1) for a system with H = (omega/2) sigma_z.
/// Impossible outcomes contribute zero heat.
HeatRecord heat_exchange(const SwitchOutcome& outcome, double f1, double omega,
                         double te_over_ts = 0.0);

/// Lowest channel temperature at which the |-> outcome heats a hotter system: T_S / 2.
double heating_threshold(double omega, double t_s);

/// Highest channel temperature at which the |+> outcome cools a colder system:
/// omega / (2 artanh(sinh(omega/T_S) / (cosh(omega/T_S) + 2))).
double cooling_threshold(double omega, double t_s);

/// f- > f1 for the |+> control, written as f2 > f1^2 / (1 - 2 f1 + 2 f1^2).
bool heating_condition(double f1, double f2);

/// f+ < f1 for the |+> control, written as f2 < 1 + (1 - f1^2) / (-1 - 2 f1 + 2 f1^2).
bool cooling_condition(double f1, double f2);

enum class SweepMode { kIco, kClassical, kCoherent };

std::string_view to_string(SweepMode mode);
/// Accepts "ico", "classical" and "coherent".
SweepMode parse_sweep_mode(std::string_view name);

/// `steps` points from lo to hi inclusive (one point at lo when steps == 1).
std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

/// One HeatRecord per entry of te_over_ts_grid (channel temperature in units of t_s).
/// The grid must be positive and strictly increasing.
std::vector<HeatRecord> sweep_heat(double t_s, double omega, double alpha,
                                   std::span<const double> te_over_ts_grid, SweepMode mode);

}  // namespace icoheat

#endif  // ICOHEAT_THERMO_HPP
