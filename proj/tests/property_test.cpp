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

// Randomized invariants across modules.

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "icoheat/channels.hpp"
#include "icoheat/ico.hpp"
#include "icoheat/otto.hpp"
#include "icoheat/sampling.hpp"
#include "icoheat/thermo.hpp"
#include "icoheat/unfolded.hpp"

using namespace icoheat;

namespace {

constexpr int kTrials = 500;

}  // namespace

TEST_CASE("channels map states to states") {
  Sampler rng(100);
  for (int i = 0; i < kTrials; ++i) {
    const auto ch = rng.random_channel(2, 1 + i % 5);
    CHECK(validate_cptp(ch).ok);
    const auto out = apply_channel(ch, rng.random_density(2));
    CHECK(density_matrix_violation(out.matrix()).empty());
  }
}

TEST_CASE("partial trace inverts kron") {
  Sampler rng(101);
  const std::array<std::size_t, 2> dims{2, 3};
  const std::array<std::size_t, 1> a{0}, b{1};
  for (int i = 0; i < kTrials; ++i) {
    const auto x = rng.random_density(2), y = rng.random_density(3);
    const auto joint = kron(x, y);
    CHECK(max_abs_diff(partial_trace(joint, dims, a).matrix(), x.matrix()) < 1e-14);
    CHECK(max_abs_diff(partial_trace(joint, dims, b).matrix(), y.matrix()) < 1e-14);
  }
}

TEST_CASE("switch outcomes are normalized, diagonal and average to the channel state") {
  Sampler rng(102);
  for (int i = 0; i < kTrials; ++i) {
    const double f1 = rng.uniform(0.0, 0.5), p = rng.uniform(0.0, 0.5);
    const ControlState ctrl(rng.uniform());
    const auto out = run_switch(f1, ctrl, p);
    CHECK(std::abs(out.p_plus + out.p_minus - 1.0) < 1e-12);
    double avg = 0.0;
    for (const auto* rho : {&out.rho_plus, &out.rho_minus}) {
      if (!*rho) continue;
      CHECK(std::abs((**rho)(0, 1)) < 1e-12);
      CHECK(std::abs((**rho)(1, 0)) < 1e-12);
    }
    if (out.rho_plus) avg += out.p_plus * out.f_plus;
    if (out.rho_minus) avg += out.p_minus * out.f_minus;
    CHECK(std::abs(avg - p) < 1e-12);
  }
}

TEST_CASE("switch of random channels is CPTP") {
  Sampler rng(103);
  for (int i = 0; i < 100; ++i) {
    const auto a = rng.random_channel(2, 1 + i % 4);
    const auto b = rng.random_channel(2, 1 + (i / 4) % 4);
    CHECK(validate_cptp(switch_kraus(a, b)).ok);
  }
}

TEST_CASE("unrecorded outcomes reproduce the classical heat") {
  Sampler rng(104);
  for (int i = 0; i < kTrials; ++i) {
    const double t_s = rng.uniform(0.2, 3.0), omega = rng.uniform(0.2, 3.0);
    const std::vector<double> grid{rng.uniform(0.1, 3.0)};
    const auto ico = sweep_heat(t_s, omega, 0.5, grid, SweepMode::kIco)[0];
    const auto cl = sweep_heat(t_s, omega, 0.5, grid, SweepMode::kClassical)[0];
    CHECK(std::abs((ico.dq_plus + ico.dq_minus) - (cl.dq_plus + cl.dq_minus)) < 1e-12);
  }
}

TEST_CASE("coherent control never reverses the heat flow") {
  Sampler rng(105);
  for (int i = 0; i < kTrials; ++i) {
    const double t_s = rng.uniform(0.2, 3.0);
    const std::vector<double> grid{rng.uniform(0.1, 3.0)};
    const auto r = sweep_heat(t_s, 1.0, rng.uniform(0.05, 0.95), grid, SweepMode::kCoherent)[0];
    const double expected = grid[0] > 1.0 ? 1.0 : -1.0;
    CHECK(r.dq_plus * expected > 0.0);
    CHECK(r.dq_minus * expected > 0.0);
  }
}

TEST_CASE("threshold scale invariance") {
  Sampler rng(106);
  for (int i = 0; i < kTrials; ++i) {
    const double omega = rng.uniform(0.1, 5.0), t_s = rng.uniform(0.1, 5.0);
    const double lambda = rng.uniform(0.1, 10.0);
    CHECK(cooling_threshold(lambda * omega, lambda * t_s) ==
          doctest::Approx(lambda * cooling_threshold(omega, t_s)).epsilon(1e-12));
    CHECK(cooling_threshold(omega, t_s) > t_s);
  }
}

TEST_CASE("Otto ledger and entropy bounds") {
  Sampler rng(107);
  for (int i = 0; i < kTrials; ++i) {
    OttoConfig c;
    c.omega1 = rng.uniform(0.3, 2.0);
    c.omega2 = c.omega1 * rng.uniform(1.0, 1.6);
    c.t4 = rng.uniform(0.3, 2.0);
    c.t2 = c.t4 * rng.uniform(0.3, 1.0);
    const auto r = run_cycle(c);
    CHECK(std::abs(r.w1 + r.q2 + r.w3 + r.q4) < 1e-12);
    CHECK(r.delta_s >= 0.0);
    CHECK(r.delta_s <= std::log(2.0) + 1e-15);
  }
}

TEST_CASE("two-qubit circuit equals the product closed form") {
  Sampler rng(108);
  for (int i = 0; i < kTrials; ++i) {
    const auto t1 = rng.random_density(2), t2 = rng.random_density(2);
    CHECK(outcome_distance(cswap_two_qubit(t1, t2), cswap_product_closed_form(t1, t2)) < 1e-12);
  }
}

TEST_CASE("sampler determinism") {
  Sampler a(55), b(55);
  for (int i = 0; i < 20; ++i) {
    CHECK(max_abs_diff(a.random_density(2).matrix(), b.random_density(2).matrix()) == 0.0);
  }
}
