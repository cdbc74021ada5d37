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

#ifndef ICOHEAT_CSV_SVG_HPP
#define ICOHEAT_CSV_SVG_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "icoheat/otto.hpp"
#include "icoheat/thermo.hpp"

namespace icoheat {

/// 12 significant digits, "C" locale, lowercase nan/inf.
std::string format_number(double v, int significant = 12);

inline constexpr const char* kHeatCsvHeader =
    "te_over_ts,p_plus,p_minus,dq_plus,dq_minus,f_plus,f_minus";
inline constexpr const char* kOttoCsvHeader = "ratio,w_net,q2,q4,p_minus,w_era,cop";

void write_heat_csv(std::ostream& os, std::span<const HeatRecord> records);
/// Impossible cycles get a nan cop and a '#' diagnostic line; a trailing
/// '# argmax_cop' line reports the best ratio.
void write_otto_csv(std::ostream& os, std::span<const OttoReport> reports);

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Standalone SVG line plot with axes, tick labels and a legend.
/// Non-finite points are skipped.
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, std::span<const PlotSeries> series);

std::string heat_svg(std::span<const HeatRecord> records, const std::string& title);
std::string otto_svg(std::span<const OttoReport> reports, const std::string& title);

}  // namespace icoheat

#endif  // ICOHEAT_CSV_SVG_HPP
