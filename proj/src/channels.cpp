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

#include "icoheat/channels.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace icoheat {

namespace {

void require_probability(double v, const char* name, const char* where) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(where) + ": " + name + " must lie in [0, 1]");
  }
}

ComplexMatrix scaled_ket_bra(double scale, std::size_t row, std::size_t col) {
  return scale * ComplexMatrix::ket_bra(2, row, col);
}

}  // namespace

double thermal_population(double omega, double temperature) {
  if (temperature == 0.0) return 0.0;
  if (std::isinf(temperature)) return 0.5;
  return 1.0 / (1.0 + std::exp(omega / temperature));
}

ThermalParams::ThermalParams(double omega, double temperature)
    : omega_(omega), temperature_(temperature) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorKind::kInvalidArgument, "ThermalParams: omega must be positive");
  }
  if (!(temperature >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "ThermalParams: temperature must be nonnegative");
  }
  population_ = thermal_population(omega, temperature);
}

KrausChannel make_gad(double p, double r) {
  require_probability(p, "p", "make_gad");
  require_probability(r, "r", "make_gad");
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);
  const double sr = std::sqrt(r);
  const double s1r = std::sqrt(1.0 - r);

  KrausChannel ch;
  ch.label = "gad(p=" + std::to_string(p) + ",r=" + std::to_string(r) + ")";
  ch.ops.push_back(ComplexMatrix::diagonal({sp, sp * s1r}));
  ch.ops.push_back(scaled_ket_bra(sp * sr, kExcited, kGround));
  ch.ops.push_back(ComplexMatrix::diagonal({sq * s1r, sq}));
  ch.ops.push_back(scaled_ket_bra(sq * sr, kGround, kExcited));
  return ch;
}

KrausChannel make_thermalizing(double p) {
  require_probability(p, "p", "make_thermalizing");
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);

  KrausChannel ch;
  ch.label = "thermalizing(p=" + std::to_string(p) + ")";
  ch.ops.push_back(scaled_ket_bra(sp, kExcited, kExcited));
  ch.ops.push_back(scaled_ket_bra(sp, kExcited, kGround));
  ch.ops.push_back(scaled_ket_bra(sq, kGround, kGround));
  ch.ops.push_back(scaled_ket_bra(sq, kGround, kExcited));
  return ch;
}

KrausChannel make_thermalizing(const ThermalParams& params) {
  return make_thermalizing(params.excited_population());
}

KrausChannel make_constant(const DensityMatrix& tau) {
  const std::size_t d = tau.dim();
  const ComplexMatrix root = psd_sqrt(tau.matrix());
  KrausChannel ch;
  ch.label = "constant";
  ch.ops.reserve(d * d);
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) ch.ops.push_back(root * ComplexMatrix::ket_bra(d, m, n));
  }
  return ch;
}

KrausChannel identity_channel(std::size_t dim) {
  return KrausChannel{{ComplexMatrix::identity(dim)}, "identity"};
}

CptpCheck validate_cptp(const KrausChannel& ch, double tol) {
  const std::size_t d = ch.ops.empty() ? 2 : ch.dim();
  ComplexMatrix sum(d);
  for (const auto& k : ch.ops) {
    if (k.dim() != d) return {false, std::numeric_limits<double>::infinity()};
    sum += k.adjoint() * k;
  }
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(d));
  return {dev <= tol, dev};
}

}  // namespace icoheat
