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

// The brute-force oracles against values computed once with an independent
// script and frozen here.

#include <doctest.h>

#include "oracles.hpp"

namespace {

const double kF = 1.0 / (1.0 + std::exp(1.0));

}  // namespace

TEST_CASE("oracle: switch populations at equal temperatures") {
  const auto o = oracle::switch_outcome(kF, 0.5, kF);
  CHECK(o.p_plus == doctest::Approx(0.7050821001377772).epsilon(1e-13));
  CHECK(o.p_minus == doctest::Approx(0.29491789986222283).epsilon(1e-13));
  CHECK(o.f_plus == doctest::Approx(0.2045108056621263).epsilon(1e-13));
  CHECK(o.f_minus == doctest::Approx(0.4229804737899983).epsilon(1e-13));
  CHECK(1.0 / o.p_minus == doctest::Approx(3.39077).epsilon(1e-5));
}

TEST_CASE("oracle: anomalous heat at T_E = 0.75") {
  CHECK(oracle::switch_heat(0.75, 1.0, 1.0, true) ==
        doctest::Approx(0.027124593750533676).epsilon(1e-12));
  CHECK(std::abs(oracle::switch_heat(0.5, 1.0, 1.0, true)) < 1e-12);
}

TEST_CASE("oracle: threshold roots by bisection") {
  const double heat_root =
      oracle::bisect([](double te) { return oracle::switch_heat(te, 1.0, 1.0, true); }, 0.3, 0.9);
  CHECK(heat_root == doctest::Approx(0.5).epsilon(1e-9));
  const double cool_root =
      oracle::bisect([](double te) { return oracle::switch_heat(te, 1.0, 1.0, false); }, 1.1, 1.9);
  CHECK(cool_root == doctest::Approx(1.4504317).epsilon(1e-7));
}

TEST_CASE("oracle: coherent control keeps the channel population") {
  const auto o = oracle::coherent_outcome(kF, 0.5, 0.1);
  CHECK(o.f_plus == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(o.f_minus == doctest::Approx(0.1).epsilon(1e-13));
}

TEST_CASE("oracle: refrigerator cycle") {
  const auto r1 = oracle::otto(1.0, 0.9, 1.0, 1.0);
  CHECK(r1.q2 == doctest::Approx(0.136817).epsilon(1e-5));
  CHECK(r1.cop == doctest::Approx(0.0652294).epsilon(1e-5));
  CHECK(std::abs(r1.w) < 1e-15);
  CHECK(oracle::otto(1.1, 0.9, 1.0, 1.0).w == doctest::Approx(-0.0119557).epsilon(1e-5));
  double best = 0.0, best_ratio = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double ratio = 1.0 + 0.5 * i / 499.0;
    const double cop = oracle::otto(ratio, 0.9, 1.0, 1.0).cop;
    if (cop > best) {
      best = cop;
      best_ratio = ratio;
    }
  }
  CHECK(best_ratio == doctest::Approx(1.1052104).epsilon(1e-6));
}

TEST_CASE("oracle: literal cSWAP on equal targets") {
  const auto o = oracle::cswap(oracle::diag2(0.25, 0.75), oracle::diag2(0.25, 0.75));
  CHECK(o.f_minus == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(o.f_plus == doctest::Approx(0.3125 / 1.625).epsilon(1e-14));
  CHECK(o.p_plus == doctest::Approx(0.8125).epsilon(1e-14));
}
