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

#include "icoheat/otto.hpp"

#include <cmath>
#include <limits>

#include "icoheat/channels.hpp"
#include "icoheat/ico.hpp"

namespace icoheat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

void OttoConfig::validate() const {
  auto fail = [](const char* why) { throw Error(ErrorKind::kInvalidArgument, why); };
  if (!(omega1 > 0.0) || !std::isfinite(omega1)) fail("OttoConfig: omega1 must be positive");
  if (!(omega2 >= omega1) || !std::isfinite(omega2)) fail("OttoConfig: omega2 must be >= omega1");
  if (!(t2 > 0.0)) fail("OttoConfig: t2 must be positive");
  if (!(t4 >= t2) || !std::isfinite(t4)) fail("OttoConfig: t4 must be finite and >= t2");
  if (!(t_r > 0.0) || !std::isfinite(t_r)) fail("OttoConfig: t_r must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("OttoConfig: alpha must lie in [0, 1]");
}

OttoReport run_cycle(const OttoConfig& cfg) {
  cfg.validate();
  OttoReport r;
  r.ratio = cfg.omega2 / cfg.omega1;
  r.f1 = thermal_population(cfg.omega1, cfg.t4);
  r.f2 = thermal_population(cfg.omega2, cfg.t2);

  // Stroke I: populations are unchanged, H1 -> H2.
  r.w1 = (cfg.omega2 - cfg.omega1) * (r.f1 - 0.5);

  // Stroke II: switch of two channels at t2, postselected on |->.
  const SwitchOutcome out = run_switch(r.f1, ControlState(cfg.alpha), r.f2);
  r.p_plus = out.p_plus;
  r.p_minus = out.p_minus;
  if (!out.rho_minus) {
    throw Error(ErrorKind::kCycleImpossible, "run_cycle: the |-> outcome has zero probability");
  }
  r.f_minus = out.f_minus;
  r.q2 = cfg.omega2 * (r.f_minus - r.f1);

  // Stroke III: H2 -> H1 at fixed populations.
  r.w3 = (cfg.omega1 - cfg.omega2) * (r.f_minus - 0.5);

  // Stroke IV: back to the initial thermal state at t4.
  r.q4 = cfg.omega1 * (r.f1 - r.f_minus);

  r.w_net = r.w1 + r.w3;
  r.delta_s = -(xlogx(r.p_minus) + xlogx(r.p_plus));
  r.w_era = cfg.t_r * r.delta_s;
  r.cop = (r.q2 + std::abs(r.w_net)) / (r.w_era / r.p_minus);
  r.expected_attempts = expected_attempts(r.p_minus);
  if (out.rho_plus) {
    r.reset_heat = (r.p_plus / r.p_minus) * cfg.omega2 * (r.f1 - out.f_plus);
  }
  return r;
}

std::vector<OttoReport> sweep_ratio(const OttoConfig& base, std::span<const double> ratios) {
  std::vector<OttoReport> reports;
  reports.reserve(ratios.size());
  for (double ratio : ratios) {
    if (!(ratio >= 1.0)) {
      throw Error(ErrorKind::kInvalidArgument, "sweep_ratio: ratios must be >= 1");
    }
    OttoConfig cfg = base;
    cfg.omega2 = ratio * base.omega1;
    try {
      reports.push_back(run_cycle(cfg));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCycleImpossible) throw;
      OttoReport r;
      r.ratio = ratio;
      r.possible = false;
      r.f1 = r.f2 = r.f_minus = r.p_plus = r.p_minus = kNaN;
      r.w1 = r.q2 = r.w3 = r.q4 = r.w_net = kNaN;
      r.delta_s = r.w_era = r.cop = r.expected_attempts = r.reset_heat = kNaN;
      reports.push_back(r);
    }
  }
  return reports;
}

double expected_attempts(double p_minus) {
  if (!(p_minus > 0.0 && p_minus <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "expected_attempts: p_minus must lie in (0, 1]");
  }
  return 1.0 / p_minus;
}

std::size_t argmax_cop(std::span<const OttoReport> reports) {
  std::size_t best = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!std::isfinite(reports[i].cop)) continue;
    if (best == reports.size() || reports[i].cop > reports[best].cop) best = i;
  }
  return best;
}

}  // namespace icoheat
