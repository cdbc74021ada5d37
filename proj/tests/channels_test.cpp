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
#include <limits>

#include "icoheat/channels.hpp"
#include "icoheat/sampling.hpp"
#include "oracles.hpp"

using namespace icoheat;

TEST_CASE("thermal population") {
  CHECK(thermal_population(1.0, 1.0) == doctest::Approx(0.268941).epsilon(1e-6));
  CHECK(thermal_population(1.0, 1.0) == doctest::Approx(oracle::thermal(1.0, 1.0)).epsilon(1e-15));
  CHECK(thermal_population(1.0, 0.0) == 0.0);
  CHECK(thermal_population(1.0, std::numeric_limits<double>::infinity()) == 0.5);
  const ThermalParams tp(2.0, 3.0);
  CHECK(tp.excited_population() == doctest::Approx(oracle::thermal(2.0, 3.0)));
  CHECK_THROWS_AS(ThermalParams(0.0, 1.0), Error);
  CHECK_THROWS_AS(ThermalParams(1.0, -1.0), Error);
}

TEST_CASE("thermalizing channel resets every input") {
  Sampler rng(7);
  const KrausChannel ch = make_thermalizing(0.268941);
  for (int i = 0; i < 20; ++i) {
    const auto out = apply_channel(ch, rng.random_density(2));
    CHECK(max_abs_diff(out.matrix(), ComplexMatrix::diagonal({0.268941, 0.731059})) < 1e-12);
  }
  const auto hot = make_thermalizing(ThermalParams(1.0, std::numeric_limits<double>::infinity()));
  CHECK(max_abs_diff(apply_channel(hot, DensityMatrix::qubit_diagonal(0.0)).matrix(),
                     ComplexMatrix::diagonal({0.5, 0.5})) < 1e-15);
  const auto cold = make_thermalizing(ThermalParams(1.0, 0.0));
  CHECK(max_abs_diff(apply_channel(cold, DensityMatrix::qubit_diagonal(1.0)).matrix(),
                     ComplexMatrix::diagonal({0.0, 1.0})) < 1e-15);
  CHECK(validate_cptp(ch).ok);
}

TEST_CASE("generalized amplitude damping") {
  const auto gad = make_gad(0.3, 0.7);
  CHECK(validate_cptp(gad).ok);
  const auto out = apply_channel(gad, DensityMatrix::qubit_diagonal(1.0));
  CHECK(out(0, 0).real() == doctest::Approx(1.0 - 0.49).epsilon(1e-14));
  CHECK(out(1, 1).real() == doctest::Approx(0.49).epsilon(1e-14));

  Sampler rng(3);
  const auto rho = rng.random_density(2);
  CHECK(max_abs_diff(apply_channel(make_gad(0.3, 0.0), rho).matrix(), rho.matrix()) < 1e-15);
  CHECK(make_gad(0.3, 0.0).ops[1].is_zero());
  CHECK(make_gad(0.3, 0.0).ops[3].is_zero());
  CHECK(max_abs_diff(apply_channel(make_gad(0.3, 1.0), rho).matrix(),
                     apply_channel(make_thermalizing(0.3), rho).matrix()) < 1e-15);
  CHECK_THROWS_AS(make_gad(1.5, 0.5), Error);
}

TEST_CASE("constant channel") {
  Sampler rng(11);
  const auto mixed = make_constant(DensityMatrix::maximally_mixed(2));
  CHECK(max_abs_diff(apply_channel(mixed, rng.random_density(2)).matrix(),
                     DensityMatrix::maximally_mixed(2).matrix()) < 1e-15);
  const Complex plus[] = {1.0, 1.0};
  const auto tau = DensityMatrix::qubit_diagonal(0.25);
  CHECK(max_abs_diff(apply_channel(make_constant(tau), DensityMatrix::pure(plus)).matrix(),
                     tau.matrix()) < 1e-15);
  for (int i = 0; i < 20; ++i) CHECK(validate_cptp(make_constant(rng.random_thermal_qubit())).ok);
}

TEST_CASE("CPTP validation") {
  KrausChannel scaled = make_thermalizing(0.4);
  for (auto& k : scaled.ops) k *= 1.01;
  const auto check = validate_cptp(scaled);
  CHECK_FALSE(check.ok);
  CHECK(check.deviation == doctest::Approx(0.0201).epsilon(1e-9));
  const auto empty = validate_cptp(KrausChannel{});
  CHECK_FALSE(empty.ok);
  CHECK(empty.deviation == 1.0);
  CHECK(validate_cptp(identity_channel(3)).ok);
}
