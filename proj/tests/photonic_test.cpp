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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "icoheat/channels.hpp"
#include "icoheat/ico.hpp"
#include "icoheat/photonic.hpp"
#include "icoheat/sampling.hpp"

using namespace icoheat;

namespace {

constexpr double kPi = std::numbers::pi;

double unitarity_gap(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2));
}

}  // namespace

TEST_CASE("plates are unitary") {
  Sampler rng(1);
  for (int i = 0; i < 50; ++i) {
    const double t = rng.uniform(-kPi, kPi);
    CHECK(unitarity_gap(hwp(t)) < 1e-12);
    CHECK(unitarity_gap(qwp(t)) < 1e-12);
  }
  CHECK(max_abs_diff(hwp(0.0), ComplexMatrix::diagonal({1.0, -1.0})) < 1e-15);
  CHECK(max_abs_diff(WavePlateSetting{PlateKind::kQuarterWave, 0.3}.jones(), qwp(0.3)) == 0.0);
}

TEST_CASE("R_Z from wave plates") {
  CHECK(phase_insensitive_distance(rz_from_wave_plates(0.0), ComplexMatrix::identity(2)) < 1e-12);
  CHECK(max_abs_diff(jones_rz(kPi), ComplexMatrix::diagonal({Complex(0, -1), Complex(0, 1)})) <
        1e-15);
  CHECK(phase_insensitive_distance(rz_from_wave_plates(kPi), jones_rz(kPi)) < 1e-12);
  const double a = adiabat_angle(1.0, 1.5, kPi);
  CHECK(a == doctest::Approx(1.25 * kPi));
  const auto plates = rz_wave_plates(a);
  CHECK(plates[1].theta == doctest::Approx(1.25 * kPi / 2.0));
  CHECK(plates[2].theta == doctest::Approx(1.25 * kPi / 4.0));
  CHECK(phase_insensitive_distance(rz_from_wave_plates(a), jones_rz(a)) < 1e-12);
  Sampler rng(2);
  for (int i = 0; i < 100; ++i) {
    const double alpha = rng.uniform(-4.0 * kPi, 4.0 * kPi);
    CHECK(phase_insensitive_distance(rz_from_wave_plates(alpha), jones_rz(alpha)) < 1e-12);
  }
  // distance is sensitive to anything beyond a global phase
  CHECK(phase_insensitive_distance(jones_rz(0.3), jones_rz(0.5)) > 1e-3);
}

TEST_CASE("adiabat angle") {
  CHECK(adiabat_angle(2.0, 2.0, 0.7) == doctest::Approx(1.4));
  CHECK(adiabat_angle(1.0, 1.5, 2.0) == doctest::Approx(2.0 * adiabat_angle(1.0, 1.5, 1.0)));
  CHECK_THROWS_AS(adiabat_angle(0.0, 1.0, 1.0), Error);
}

TEST_CASE("thermal state preparation") {
  CHECK(prep_angle(1.0) == 0.0);
  CHECK(prep_angle(0.5) == doctest::Approx(kPi / 8.0));
  Sampler rng(3);
  for (int i = 0; i < 100; ++i) {
    const double f = rng.uniform();
    CHECK(prep_population(prep_angle(f)) == doctest::Approx(f).epsilon(1e-12));
    CHECK(prepare_thermal_state(prep_angle(f)).excited_population() ==
          doctest::Approx(f).epsilon(1e-12));
  }
  CHECK_THROWS_AS(prep_angle(1.5), Error);
}

TEST_CASE("Kraus angle table") {
  const auto& table = kraus_angle_table();
  const double q = kPi / 4.0;
  const std::array<std::array<double, 4>, 4> expected{
      {{0, 0, q, 0}, {q, 0, q, 0}, {0, q, 0, 0}, {q, q, 0, 0}}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(table[k].kraus_index == static_cast<int>(k));
    for (std::size_t a = 0; a < 4; ++a) CHECK(table[k].angles[a] == expected[k][a]);
  }
  CHECK(table[0].weight(0.3) == 0.3);
  CHECK(table[2].weight(0.3) == 0.7);

  const auto reference = make_thermalizing(1.0);
  const auto lower = make_thermalizing(0.0);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto unit = mzi_operator(table[k].angles);
    const auto& target = k < 2 ? reference.ops[k] : lower.ops[k];
    CHECK(phase_insensitive_distance(unit, target) < 1e-12);
  }
  Sampler rng(4);
  for (int i = 0; i < 20; ++i) {
    const double p = rng.uniform();
    CHECK(validate_cptp(thermalizing_from_table(p)).ok);
  }
}

TEST_CASE("decomposed experiment") {
  const double f = 1.0 / (1.0 + std::exp(1.0));
  const auto runs = run_switch_branches(f, ControlState::plus(), f);
  REQUIRE(runs.size() == 16);
  int zero = 0;
  for (const auto& r : runs) zero += r.zero_operator ? 1 : 0;
  CHECK(zero == 4);

  const auto direct = run_switch(f, ControlState::plus(), f);
  const auto rebuilt = reconstruct_switch_state(f, f, ControlState::plus());
  CHECK(rebuilt.p_plus == doctest::Approx(direct.p_plus).epsilon(1e-13));
  CHECK(trace_distance(rebuilt.rho_minus->matrix(), direct.rho_minus->matrix()) < 1e-12);

  for (const auto& r : run_switch_branches(0.3, ControlState::plus(), 1.0)) {
    if (r.i >= 2 || r.j >= 2) CHECK(r.weight == 0.0);
  }
  const auto hot = reconstruct_switch_state(0.3, 1.0, ControlState::plus());
  const auto hot_direct = run_switch(0.3, ControlState::plus(), 1.0);
  CHECK(trace_distance(hot.rho_plus->matrix(), hot_direct.rho_plus->matrix()) < 1e-12);
}
