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

#include "icoheat/channels.hpp"
#include "icoheat/ico.hpp"
#include "icoheat/sampling.hpp"
#include "oracles.hpp"

using namespace icoheat;

namespace {

const double kF = 1.0 / (1.0 + std::exp(1.0));

}  // namespace

TEST_CASE("switch Kraus operators") {
  const auto th = make_thermalizing(0.3);
  const auto sw = switch_kraus(th, th);
  REQUIRE(sw.ops.size() == 16);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool vanishes = (i == 0 && j == 2) || (i == 1 && j == 1) || (i == 2 && j == 0) ||
                            (i == 3 && j == 3);
      CHECK(sw.ops[i * 4 + j].is_zero(1e-15) == vanishes);
    }
  }
  CHECK(validate_cptp(sw).ok);
  const auto id = switch_kraus(identity_channel(), identity_channel());
  REQUIRE(id.ops.size() == 1);
  CHECK(max_abs_diff(id.ops[0], ComplexMatrix::identity(4)) == 0.0);
  CHECK_THROWS_AS(switch_kraus(identity_channel(3), identity_channel()), Error);
}

TEST_CASE("switch at equal temperatures matches the oracle") {
  const auto out = run_switch(kF, ControlState::plus(), kF);
  const auto ref = oracle::switch_outcome(kF, 0.5, kF);
  CHECK(out.p_plus == doctest::Approx(ref.p_plus).epsilon(1e-14));
  CHECK(out.p_minus == doctest::Approx(ref.p_minus).epsilon(1e-14));
  CHECK(out.f_plus == doctest::Approx(ref.f_plus).epsilon(1e-14));
  CHECK(out.f_minus == doctest::Approx(ref.f_minus).epsilon(1e-14));
  // frozen
  CHECK(out.p_plus == doctest::Approx(0.7050821001377772).epsilon(1e-13));
  CHECK(out.f_minus == doctest::Approx(0.4229804737899983).epsilon(1e-13));

  const auto cf = switch_closed_form(kF, ControlState::plus(), kF);
  CHECK(cf.p_plus == doctest::Approx(out.p_plus).epsilon(1e-14));
  CHECK(cf.f_plus == doctest::Approx(out.f_plus).epsilon(1e-14));
  CHECK(cf.f_minus == doctest::Approx(out.f_minus).epsilon(1e-14));
}

TEST_CASE("switch limiting cases") {
  const auto zero = run_switch(0.2, ControlState(1.0), 0.35);
  CHECK(zero.p_plus == doctest::Approx(0.5));
  CHECK(zero.p_minus == doctest::Approx(0.5));
  CHECK(zero.f_plus == doctest::Approx(0.35));
  CHECK(zero.f_minus == doctest::Approx(0.35));

  const auto frozen = run_switch(0.0, ControlState::plus(), 0.0);
  CHECK(frozen.p_plus == doctest::Approx(1.0));
  CHECK(frozen.p_minus == doctest::Approx(0.0));
  CHECK_FALSE(frozen.rho_minus.has_value());
  CHECK(std::isnan(frozen.f_minus));
  CHECK(std::isnan(switch_closed_form(0.0, ControlState::plus(), 0.0).f_minus));
}

TEST_CASE("random triples agree with closed form and oracle") {
  Sampler rng(2024);
  for (int i = 0; i < 200; ++i) {
    const double f1 = rng.uniform(0.0, 0.5), p = rng.uniform(0.0, 0.5), a = rng.uniform();
    const auto m = run_switch(f1, ControlState(a), p);
    const auto cf = switch_closed_form(f1, ControlState(a), p);
    const auto ref = oracle::switch_outcome(f1, a, p);
    CHECK(std::abs(m.p_plus - cf.p_plus) < 1e-12);
    CHECK(std::abs(m.f_plus - cf.f_plus) < 1e-12);
    CHECK(std::abs(m.f_minus - cf.f_minus) < 1e-12);
    CHECK(std::abs(m.f_minus - ref.f_minus) < 1e-12);
    CHECK(std::abs(m.p_minus - ref.p_minus) < 1e-12);
  }
}

TEST_CASE("classical heat") {
  CHECK(classical_heat(0.3, 0.3, 1.0).dq_plus == 0.0);
  const auto cold = classical_heat(kF, 1.0 / (1.0 + std::exp(2.0)), 1.0);
  CHECK(cold.dq_plus == doctest::Approx(-0.07486924967393878).epsilon(1e-12));
  CHECK(cold.dq_minus == cold.dq_plus);
  const auto hot = classical_heat(kF, 1.0 / (1.0 + std::exp(0.5)), 1.0);
  CHECK(hot.dq_plus == doctest::Approx(0.05429962371407515).epsilon(1e-12));
}

TEST_CASE("coherent control") {
  const auto th = make_thermalizing(0.2);
  CHECK(validate_cptp(coherent_control_kraus(th, th)).ok);
  const auto a0 = coherent_control(0.3, ControlState(1.0), 0.2);
  CHECK(max_abs_diff(a0.rho_plus->matrix(), ComplexMatrix::diagonal({0.2, 0.8})) < 1e-14);
  CHECK(max_abs_diff(a0.rho_minus->matrix(), ComplexMatrix::diagonal({0.2, 0.8})) < 1e-14);
  const auto eq = coherent_control(kF, ControlState::plus(), kF);
  CHECK(std::abs(eq.p_plus * (eq.f_plus - kF)) < 1e-12);
  CHECK(std::abs(eq.p_minus * (eq.f_minus - kF)) < 1e-12);
  const auto ref = oracle::coherent_outcome(0.25, 0.5, 0.1);
  const auto cc = coherent_control(0.25, ControlState::plus(), 0.1);
  CHECK(cc.p_plus == doctest::Approx(ref.p_plus).epsilon(1e-14));
  CHECK(cc.f_minus == doctest::Approx(ref.f_minus).epsilon(1e-14));
  CHECK(max_abs_diff(cc.rho_plus->matrix(),
                     ComplexMatrix(2, {ref.rho_plus.a.begin(), ref.rho_plus.a.end()})) < 1e-14);
  CHECK_THROWS_AS(coherent_control_kraus(th, identity_channel()), Error);
}

TEST_CASE("control state") {
  CHECK(ControlState::plus().coherence() == doctest::Approx(0.5));
  CHECK(ControlState(0.0).coherence() == 0.0);
  CHECK_THROWS_AS(ControlState(1.2), Error);
  const auto d = ControlState(0.3).density();
  CHECK(d(0, 0).real() == doctest::Approx(0.3));
  CHECK(d(0, 1).real() == doctest::Approx(std::sqrt(0.21)));
}
