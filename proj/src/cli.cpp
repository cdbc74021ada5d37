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

#include "icoheat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "icoheat/channels.hpp"
#include "icoheat/csv_svg.hpp"
#include "icoheat/ico.hpp"
#include "icoheat/otto.hpp"
#include "icoheat/photonic.hpp"
#include "icoheat/qmat.hpp"
#include "icoheat/sampling.hpp"
#include "icoheat/thermo.hpp"
#include "icoheat/unfolded.hpp"

namespace icoheat {

namespace {

constexpr double kPi = 3.14159265358979323846;

SuiteResult finish(std::string name, double dev, std::size_t trials, double tol) {
  return SuiteResult{std::move(name), dev, trials, std::isfinite(dev) && dev <= tol};
}

double population_gap(const SwitchOutcome& a, const SwitchPopulations& b) {
  double d = std::max(std::abs(a.p_plus - b.p_plus), std::abs(a.p_minus - b.p_minus));
  if (a.rho_plus) d = std::max(d, std::abs(a.f_plus - b.f_plus));
  if (a.rho_minus) d = std::max(d, std::abs(a.f_minus - b.f_minus));
  return d;
}

double state_gap(const std::optional<DensityMatrix>& a, const std::optional<DensityMatrix>& b) {
  if (a.has_value() != b.has_value()) return 1.0;
  if (!a) return 0.0;
  return trace_distance(a->matrix(), b->matrix());
}

double sign_of(double v, double tol) {
  if (std::abs(v) <= tol) return 0.0;
  return v > 0.0 ? 1.0 : -1.0;
}

}  // namespace

SuiteResult verify_unfolded_equivalence(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    UnfoldSetup s{rng.random_density(2), rng.random_density(2), rng.random_density(2),
                  rng.random_density(2)};
    const auto closed = switch_constant_closed_form(s).matrix();
    const auto circuit = unfolded_circuit(s).matrix();
    const auto channels = switch_constant_channels(s).matrix();
    dev = std::max({dev, trace_distance(circuit, closed), trace_distance(channels, closed),
                    trace_distance(circuit, channels)});
  }
  return finish("unfolded-equivalence", dev, trials, tol);
}

SuiteResult verify_cptp(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double p = rng.uniform();
    const double r = rng.uniform();
    const auto a = rng.random_channel(2, 1 + t % 4);
    const auto b = rng.random_channel(2, 1 + (t / 4) % 4);
    const auto th1 = make_thermalizing(p);
    const auto th2 = make_thermalizing(rng.uniform());
    const KrausChannel checks[] = {
        make_gad(p, r),
        th1,
        make_constant(rng.random_density(2)),
        a,
        switch_kraus(a, b),
        switch_kraus(th1, th2),
        coherent_control_kraus(th1, th2),
    };
    for (const auto& ch : checks) dev = std::max(dev, validate_cptp(ch, tol).deviation);
  }
  return finish("cptp", dev, trials, tol);
}

SuiteResult verify_closed_form(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double f1 = rng.uniform(0.0, 0.5);
    const double p = rng.uniform(0.0, 0.5);
    const ControlState ctrl(rng.uniform(0.0, 1.0));
    dev = std::max(dev, population_gap(run_switch(f1, ctrl, p), switch_closed_form(f1, ctrl, p)));
  }
  return finish("closed-form-vs-matrix", dev, trials, tol);
}

SuiteResult verify_coherent_sign(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double f1 = rng.uniform(0.0, 0.5);
    const double p = rng.uniform(0.0, 0.5);
    const ControlState ctrl(rng.uniform(0.0, 1.0));
    const auto out = coherent_control(f1, ctrl, p);
    const auto rec = heat_exchange(out, f1, 1.0);
    // conditional populations equal p, so heat follows p - f1
    if (out.rho_plus) {
      dev = std::max(dev, std::abs(out.f_plus - p));
      if (sign_of(rec.dq_plus, 0.0) != sign_of(p - f1, 0.0) && std::abs(p - f1) > tol) dev = 1.0;
    }
    if (out.rho_minus) {
      dev = std::max(dev, std::abs(out.f_minus - p));
      if (sign_of(rec.dq_minus, 0.0) != sign_of(p - f1, 0.0) && std::abs(p - f1) > tol) dev = 1.0;
    }
  }
  return finish("coherent-control-sign", dev, trials, tol);
}

SuiteResult verify_rz_decomposition(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double alpha = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    dev = std::max(dev, phase_insensitive_distance(rz_from_wave_plates(alpha), jones_rz(alpha)));
  }
  return finish("rz-wave-plates", dev, trials, tol);
}

SuiteResult verify_branch_reconstruction(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double f1 = rng.uniform(0.0, 0.5);
    const double p = rng.uniform(0.0, 0.5);
    const ControlState ctrl(rng.uniform(0.0, 1.0));
    const auto direct = run_switch(f1, ctrl, p);
    const auto rebuilt = reconstruct_switch_state(f1, p, ctrl);
    dev = std::max({dev, std::abs(direct.p_plus - rebuilt.p_plus),
                    std::abs(direct.p_minus - rebuilt.p_minus),
                    state_gap(direct.rho_plus, rebuilt.rho_plus),
                    state_gap(direct.rho_minus, rebuilt.rho_minus)});
  }
  return finish("branch-reconstruction", dev, trials, tol);
}

SuiteResult verify_kraus_table(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double p = rng.uniform();
    const auto table = thermalizing_from_table(p);
    const auto reference = make_thermalizing(p);
    for (std::size_t k = 0; k < reference.ops.size(); ++k) {
      dev = std::max(dev, phase_insensitive_distance(table.ops[k], reference.ops[k]));
    }
    const auto rho = rng.random_density(2);
    dev = std::max(dev, trace_distance(apply_channel(table, rho).matrix(),
                                       apply_channel(reference, rho).matrix()));
  }
  return finish("kraus-table", dev, trials, tol);
}

SuiteResult verify_state_preparation(std::size_t trials, std::uint64_t seed, double tol) {
  Sampler rng(seed);
  double dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double f = rng.uniform(0.0, 0.5);
    const auto rho = prepare_thermal_state(prep_angle(f));
    dev = std::max(dev, trace_distance(rho.matrix(), DensityMatrix::qubit_diagonal(f).matrix()));
  }
  return finish("state-preparation", dev, trials, tol);
}

namespace {

// Flags missing from the command line are filled in from the JSON config.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  std::string path;
  if (it != args.end()) {
    if (it + 1 == args.end()) throw CLI::ArgumentMismatch("--config requires a path");
    path = *(it + 1);
    args.erase(it, it + 2);
  } else {
    for (auto a = args.begin(); a != args.end(); ++a) {
      if (a->rfind("--config=", 0) == 0) {
        path = a->substr(9);
        args.erase(a);
        break;
      }
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw CLI::FileError("cannot open config file " + path);
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ValidationError("--config", std::string("invalid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw CLI::ValidationError("--config", "top level must be an object");

  auto present = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  for (const auto& [key, value] : cfg.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (present(flag)) continue;
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number_integer() || value.is_number_unsigned()) {
      text = value.dump();
    } else if (value.is_number()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
      text = buf;
    } else {
      throw CLI::ValidationError("--config", "unsupported value for key " + key);
    }
    args.push_back(flag);
    args.push_back(text);
  }
  return args;
}

struct OutputOptions {
  std::string path;
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--output,-o", o.path, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
}

void emit(const OutputOptions& o, const std::string& body, std::ostream& out) {
  if (o.path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw CLI::FileError("cannot write " + o.path);
  f << body;
}

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string suite_line(const SuiteResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-24s trials=%zu max_deviation=%.3e %s", r.name.c_str(),
                r.trials, r.max_deviation, r.passed ? "PASS" : "FAIL");
  return buf;
}

int report_suites(std::span<const SuiteResult> results, const OutputOptions& o,
                  std::ostream& out) {
  std::ostringstream s;
  bool all = true;
  for (const auto& r : results) {
    s << suite_line(r) << '\n';
    all = all && r.passed;
  }
  s << (all ? "overall PASS" : "overall FAIL") << '\n';
  emit(o, s.str(), out);
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(std::span<const std::string> args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indefinite causal order heat-exchange simulator", "icoheat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "icoheat 0.1.0");

  OutputOptions output;

  struct {
    std::string mode = "ico";
    double t_s = 1.0, omega = 1.0, alpha = 0.5, te_min = 0.25, te_max = 2.0;
    std::size_t steps = 200;
  } sw;
  auto* sweep = app.add_subcommand("sweep", "Heat exchanged per control outcome vs T_E/T_S");
  sweep->add_option("--mode", sw.mode, "ico, classical or coherent")
      ->check(CLI::IsMember({"ico", "classical", "coherent"}))
      ->capture_default_str();
  sweep->add_option("--t-s", sw.t_s, "System temperature")->capture_default_str();
  sweep->add_option("--omega", sw.omega, "Level splitting")->capture_default_str();
  sweep->add_option("--alpha", sw.alpha, "Control weight on |0>")->capture_default_str();
  sweep->add_option("--te-min", sw.te_min, "Smallest T_E/T_S")->capture_default_str();
  sweep->add_option("--te-max", sw.te_max, "Largest T_E/T_S")->capture_default_str();
  sweep->add_option("--steps", sw.steps, "Grid points")->capture_default_str();
  add_output_flags(sweep, output);

  struct {
    double t2 = 0.9, t4 = 1.0, omega1 = 1.0, ratio_min = 1.0, ratio_max = 1.5, alpha = 0.5;
    std::optional<double> t_r;
    std::size_t steps = 500;
  } ot;
  auto* otto = app.add_subcommand("otto", "Refrigerator cycle vs omega2/omega1");
  otto->add_option("--t2", ot.t2, "Channel temperature on stroke II")->capture_default_str();
  otto->add_option("--t4", ot.t4, "Bath temperature on stroke IV")->capture_default_str();
  otto->add_option("--omega1", ot.omega1, "Initial level splitting")->capture_default_str();
  otto->add_option("--ratio-min", ot.ratio_min, "Smallest omega2/omega1")->capture_default_str();
  otto->add_option("--ratio-max", ot.ratio_max, "Largest omega2/omega1")->capture_default_str();
  otto->add_option("--steps", ot.steps, "Grid points")->capture_default_str();
  otto->add_option("--alpha", ot.alpha, "Control weight on |0>")->capture_default_str();
  otto->add_option("--t-r", ot.t_r, "Erasure temperature (default: t4)");
  add_output_flags(otto, output);

  struct {
    double omega = 1.0, t_s = 1.0;
  } th;
  auto* thresholds = app.add_subcommand("thresholds", "Anomalous heating and cooling bounds");
  thresholds->add_option("--omega", th.omega, "Level splitting")->capture_default_str();
  thresholds->add_option("--t-s", th.t_s, "System temperature")->capture_default_str();
  add_output_flags(thresholds, output);

  struct {
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-12;
  } vf;
  auto* verify = app.add_subcommand("verify", "Randomized closed-form and circuit cross-checks");
  auto* photonic = app.add_subcommand("photonic-check", "Optical implementation checks");
  for (auto* cmd : {verify, photonic}) {
    cmd->add_option("--trials", vf.trials, "Random trials per suite")->capture_default_str();
    cmd->add_option("--seed", vf.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--tol", vf.tol, "Pass threshold on max deviation")->capture_default_str();
    add_output_flags(cmd, output);
  }

  try {
    auto args = merge_config(std::vector<std::string>(args_in.begin(), args_in.end()));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kExitOk;
  } catch (const CLI::Error& e) {
    err << "icoheat: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sweep) {
      const auto mode = parse_sweep_mode(sw.mode);
      const auto grid = uniform_grid(sw.te_min, sw.te_max, sw.steps);
      const auto records = sweep_heat(sw.t_s, sw.omega, sw.alpha, grid, mode);
      if (output.format == "svg") {
        emit(output, heat_svg(records, std::string("heat exchange (") + sw.mode + ")"), out);
      } else {
        std::ostringstream s;
        s << "# sweep mode=" << sw.mode << " t_s=" << format_number(sw.t_s)
          << " omega=" << format_number(sw.omega) << " alpha=" << format_number(sw.alpha) << '\n';
        write_heat_csv(s, records);
        emit(output, s.str(), out);
      }
      return kExitOk;
    }
    if (*otto) {
      if (ot.ratio_min < 1.0) throw Error(ErrorKind::kInvalidArgument, "--ratio-min must be >= 1");
      OttoConfig base;
      base.omega1 = ot.omega1;
      base.omega2 = ot.omega1;
      base.t2 = ot.t2;
      base.t4 = ot.t4;
      base.t_r = ot.t_r.value_or(ot.t4);
      base.alpha = ot.alpha;
      base.validate();
      const auto ratios = uniform_grid(ot.ratio_min, ot.ratio_max, ot.steps);
      const auto reports = sweep_ratio(base, ratios);
      if (output.format == "svg") {
        emit(output, otto_svg(reports, "ICO refrigerator"), out);
      } else {
        std::ostringstream s;
        s << "# otto t2=" << format_number(base.t2) << " t4=" << format_number(base.t4)
          << " omega1=" << format_number(base.omega1) << " t_r=" << format_number(base.t_r)
          << " alpha=" << format_number(base.alpha) << '\n';
        write_otto_csv(s, reports);
        emit(output, s.str(), out);
      }
      return kExitOk;
    }
    if (*thresholds) {
      std::ostringstream s;
      s << "heating_min_te " << format_fixed6(heating_threshold(th.omega, th.t_s)) << '\n'
        << "cooling_max_te " << format_fixed6(cooling_threshold(th.omega, th.t_s)) << '\n';
      emit(output, s.str(), out);
      return kExitOk;
    }
    if (*verify) {
      const SuiteResult results[] = {
          verify_unfolded_equivalence(vf.trials, vf.seed, vf.tol),
          verify_cptp(vf.trials, vf.seed + 1, vf.tol),
          verify_closed_form(vf.trials, vf.seed + 2, vf.tol),
          verify_coherent_sign(vf.trials, vf.seed + 3, vf.tol),
      };
      return report_suites(results, output, out);
    }
    if (*photonic) {
      const SuiteResult results[] = {
          verify_rz_decomposition(vf.trials, vf.seed, vf.tol),
          verify_branch_reconstruction(vf.trials, vf.seed + 1, vf.tol),
          verify_kraus_table(vf.trials, vf.seed + 2, vf.tol),
          verify_state_preparation(vf.trials, vf.seed + 3, vf.tol),
      };
      return report_suites(results, output, out);
    }
  } catch (const Error& e) {
    err << "icoheat: " << e.what() << '\n';
    return e.kind() == ErrorKind::kInvalidArgument ? kExitUsage : kExitVerificationFailed;
  } catch (const CLI::Error& e) {
    err << "icoheat: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "icoheat: no command\n";
  return kExitUsage;
}

}  // namespace icoheat
