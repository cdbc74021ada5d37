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

#include "icoheat/csv_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace icoheat {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 160.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string format_number(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

void write_heat_csv(std::ostream& os, std::span<const HeatRecord> records) {
  os << kHeatCsvHeader << '\n';
  for (const auto& r : records) {
    os << format_number(r.te_over_ts) << ',' << format_number(r.p_plus) << ','
       << format_number(r.p_minus) << ',' << format_number(r.dq_plus) << ','
       << format_number(r.dq_minus) << ',' << format_number(r.f_plus) << ','
       << format_number(r.f_minus) << '\n';
  }
}

void write_otto_csv(std::ostream& os, std::span<const OttoReport> reports) {
  os << kOttoCsvHeader << '\n';
  for (const auto& r : reports) {
    if (!r.possible) os << "# cycle impossible at ratio=" << format_number(r.ratio) << '\n';
    os << format_number(r.ratio) << ',' << format_number(r.w_net) << ',' << format_number(r.q2)
       << ',' << format_number(r.q4) << ',' << format_number(r.p_minus) << ','
       << format_number(r.w_era) << ',' << format_number(r.cop) << '\n';
  }
  const std::size_t best = argmax_cop(reports);
  if (best < reports.size()) {
    os << "# argmax_cop ratio=" << format_number(reports[best].ratio)
       << " cop=" << format_number(reports[best].cop) << '\n';
  } else {
    os << "# argmax_cop none\n";
  }
}

std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, std::span<const PlotSeries> series) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!std::isfinite(xmin)) {
    xmin = 0.0;
    xmax = 1.0;
    ymin = 0.0;
    ymax = 1.0;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title) << "</text>\n";
  svg << "<rect x=\"" << coord(kLeft) << "\" y=\"" << coord(kTop) << "\" width=\""
      << coord(plot_w) << "\" height=\"" << coord(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = xmin + (xmax - xmin) * t / kTicks;
    const double fy = ymin + (ymax - ymin) * t / kTicks;
    svg << "<text x=\"" << coord(sx(fx)) << "\" y=\"" << coord(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_number(fx, 4) << "</text>\n";
    svg << "<text x=\"" << coord(kLeft - 6) << "\" y=\"" << coord(sy(fy) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_number(fy, 4) << "</text>\n";
  }
  if (ymin < 0.0 && ymax > 0.0) {
    svg << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(sy(0.0)) << "\" x2=\""
        << coord(kLeft + plot_w) << "\" y2=\"" << coord(sy(0.0))
        << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  svg << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"" << coord(kHeight - 16)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(x_label) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << coord(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << coord(kTop + plot_h / 2) << ")\">" << escape(y_label)
      << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* colour = kPalette[k % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!first) svg << ' ';
      svg << coord(sx(s.x[i])) << ',' << coord(sy(s.y[i]));
      first = false;
    }
    svg << "\"/>\n";
    const double ly = kTop + 16.0 + 20.0 * static_cast<double>(k);
    svg << "<line x1=\"" << coord(kLeft + plot_w + 12) << "\" y1=\"" << coord(ly) << "\" x2=\""
        << coord(kLeft + plot_w + 36) << "\" y2=\"" << coord(ly) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << coord(kLeft + plot_w + 42) << "\" y=\"" << coord(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string heat_svg(std::span<const HeatRecord> records, const std::string& title) {
  PlotSeries plus{"dQ+", {}, {}};
  PlotSeries minus{"dQ-", {}, {}};
  for (const auto& r : records) {
    plus.x.push_back(r.te_over_ts);
    plus.y.push_back(r.dq_plus);
    minus.x.push_back(r.te_over_ts);
    minus.y.push_back(r.dq_minus);
  }
  const PlotSeries all[] = {plus, minus};
  return render_svg(title, "T_E / T_S", "heat", all);
}

std::string otto_svg(std::span<const OttoReport> reports, const std::string& title) {
  PlotSeries w{"W", {}, {}};
  PlotSeries q2{"Q_II", {}, {}};
  PlotSeries q4{"Q_IV", {}, {}};
  PlotSeries cop{"COP", {}, {}};
  for (const auto& r : reports) {
    for (auto* s : {&w, &q2, &q4, &cop}) s->x.push_back(r.ratio);
    w.y.push_back(r.w_net);
    q2.y.push_back(r.q2);
    q4.y.push_back(r.q4);
    cop.y.push_back(r.cop);
  }
  const PlotSeries all[] = {w, q2, q4, cop};
  return render_svg(title, "omega2 / omega1", "energy", all);
}

}  // namespace icoheat
