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

#include "icoheat/thermo.hpp"

#include <cmath>
#include <string>

namespace icoheat {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must be positive and finite");
  }
}

}  // namespace

HeatRecord heat_exchange(const SwitchOutcome& outcome, double f1, double omega,
                         double te_over_ts) {
  HeatRecord rec;
  rec.te_over_ts = te_over_ts;
  rec.p_plus = outcome.p_plus;
  rec.p_minus = outcome.p_minus;
  rec.f_plus = outcome.f_plus;
  rec.f_minus = outcome.f_minus;
  rec.dq_plus = outcome.rho_plus ? outcome.p_plus * omega * (outcome.f_plus - f1) : 0.0;
  rec.dq_minus = outcome.rho_minus ? outcome.p_minus * omega * (outcome.f_minus - f1) : 0.0;
  return rec;
}

double heating_threshold(double omega, double t_s) {
  require_positive(omega, "heating_threshold: omega");
  require_positive(t_s, "heating_threshold: t_s");
  return 0.5 * t_s;
}

double cooling_threshold(double omega, double t_s) {
  require_positive(omega, "cooling_threshold: omega");
  require_positive(t_s, "cooling_threshold: t_s");
  const double x = omega / t_s;
  // 2 artanh(sinh x / (cosh x + 2)) = ln((e^x + 2) / (e^-x + 2)), kept stable for large x.
  const double e = std::exp(-x);
  return omega / (x + std::log1p(2.0 * e) - std::log(2.0 + e));
}

bool heating_condition(double f1, double f2) {
  return f2 > f1 * f1 / (1.0 - 2.0 * f1 + 2.0 * f1 * f1);
}

bool cooling_condition(double f1, double f2) {
  return f2 < 1.0 + (1.0 - f1 * f1) / (-1.0 - 2.0 * f1 + 2.0 * f1 * f1);
}

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::kIco: return "ico";
    case SweepMode::kClassical: return "classical";
    case SweepMode::kCoherent: return "coherent";
  }
  return "unknown";
}

SweepMode parse_sweep_mode(std::string_view name) {
  if (name == "ico") return SweepMode::kIco;
  if (name == "classical") return SweepMode::kClassical;
  if (name == "coherent") return SweepMode::kCoherent;
  throw Error(ErrorKind::kInvalidArgument, "unknown sweep mode '" + std::string(name) + "'");
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  if (steps == 0) throw Error(ErrorKind::kInvalidArgument, "uniform_grid: steps must be >= 1");
  if (!(hi >= lo)) throw Error(ErrorKind::kInvalidArgument, "uniform_grid: hi < lo");
  std::vector<double> grid(steps);
  if (steps == 1) {
    grid[0] = lo;
    return grid;
  }
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) grid[i] = lo + h * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

std::vector<HeatRecord> sweep_heat(double t_s, double omega, double alpha,
                                   std::span<const double> te_over_ts_grid, SweepMode mode) {
  require_positive(t_s, "sweep_heat: t_s");
  require_positive(omega, "sweep_heat: omega");
  const ControlState ctrl(alpha);
  for (std::size_t i = 0; i < te_over_ts_grid.size(); ++i) {
    require_positive(te_over_ts_grid[i], "sweep_heat: grid point");
    if (i > 0 && !(te_over_ts_grid[i] > te_over_ts_grid[i - 1])) {
      throw Error(ErrorKind::kInvalidArgument, "sweep_heat: grid must be strictly increasing");
    }
  }

  const double f1 = thermal_population(omega, t_s);
  std::vector<HeatRecord> records;
  records.reserve(te_over_ts_grid.size());
  for (double ratio : te_over_ts_grid) {
    const double p = thermal_population(omega, ratio * t_s);
    switch (mode) {
      case SweepMode::kIco:
        records.push_back(heat_exchange(run_switch(f1, ctrl, p), f1, omega, ratio));
        break;
      case SweepMode::kCoherent:
        records.push_back(heat_exchange(coherent_control(f1, ctrl, p), f1, omega, ratio));
        break;
      case SweepMode::kClassical: {
        const ClassicalHeat heat = classical_heat(f1, p, omega);
        HeatRecord rec;
        rec.te_over_ts = ratio;
        rec.dq_plus = heat.dq_plus;
        rec.dq_minus = heat.dq_minus;
        rec.p_plus = 0.5;
        rec.p_minus = 0.5;
        rec.f_plus = p;
        rec.f_minus = p;
        records.push_back(rec);
        break;
      }
    }
  }
  return records;
}

}  // namespace icoheat
