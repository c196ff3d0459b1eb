// Copyright 2026 The gatequiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gatequiv_tools/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "gatequiv/calibrate.hpp"
#include "gatequiv/equivalence.hpp"
#include "gatequiv/filterfn.hpp"
#include "gatequiv/montecarlo.hpp"
#include "gatequiv/phases.hpp"
#include "gatequiv_tools/scenario.hpp"

#ifndef GATEQUIV_VERSION
#define GATEQUIV_VERSION "unknown"
#endif

namespace gatequiv::tools {

namespace {

namespace fs = std::filesystem;

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_points;
  bool quiet = false;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Context {
 public:
  Context(const Options& options, std::ostream& out) : options_(options), out_(out) {
    std::ifstream in(options.config, std::ios::binary);
    if (!in) throw ValidationError("cannot open config '" + options.config + "'");
    std::stringstream bytes;
    bytes << in.rdbuf();
    std::string hashed = bytes.str();
    scenario = load_scenario(options.config);
    if (options.seed) {
      scenario.montecarlo.seed = *options.seed;
      hashed += "\n--seed=" + std::to_string(*options.seed);
    }
    if (options.grid_points) {
      if (*options.grid_points < 2) throw ValidationError("--grid-points must be >= 2");
      scenario.grid_points = *options.grid_points;
      hashed += "\n--grid-points=" + std::to_string(*options.grid_points);
    }
    hash = fnv1a_hex(hashed);
    fs::create_directories(options.out_dir);
  }

  Scenario scenario;
  std::string hash;

  void write_csv(const std::string& file, const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows,
                 const std::vector<std::string>& notes = {}) const {
    const fs::path path = fs::path(options_.out_dir) / file;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    os << "# gatequiv " << GATEQUIV_VERSION << " config-hash=fnv1a:" << hash
       << " scenario=" << scenario.name << "\n";
    for (const auto& n : notes) os << "# " << n << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_double(r[i]);
      os << "\n";
    }
    if (!options_.quiet) out_ << "wrote " << path.string() << "\n";
  }

  void write_report(const std::string& file, const std::string& text) const {
    const fs::path path = fs::path(options_.out_dir) / file;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    os << "# gatequiv " << GATEQUIV_VERSION << " config-hash=fnv1a:" << hash
       << " scenario=" << scenario.name << "\n"
       << text;
    if (!options_.quiet) out_ << text;
  }

  void require_transform() const {
    if (!scenario.transform) throw ValidationError("scenario has no 'transform' section");
  }

  /// Endpoint check used by every command that builds a transformed schedule.
  std::string endpoint_line(const FrameTransform& t, bool& ok) const {
    const double v = t.endpoint_violation();
    ok = v <= scenario.tolerances.conditions;
    std::ostringstream os;
    os << "endpoint_violation " << format_double(v) << (ok ? " ok" : " FAIL (Q(T) != 1)") << "\n";
    return os.str();
  }

 private:
  Options options_;
  std::ostream& out_;
};

std::vector<std::string> filter_columns(const std::vector<NoiseChannel>& channels) {
  std::vector<std::string> cols{"omega"};
  for (const auto& c : channels) cols.push_back("F_" + c.label);
  return cols;
}

std::vector<std::vector<double>> filter_rows(const std::vector<FilterFunctionResult>& results) {
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < results.front().omega.size(); ++k) {
    std::vector<double> r{results.front().omega[k]};
    for (const auto& res : results) r.push_back(res.filter[k]);
    rows.push_back(std::move(r));
  }
  return rows;
}

int cmd_filterfn(Context& ctx) {
  const Scenario& s = ctx.scenario;
  const auto channels = s.noise_channels();
  const auto grid = s.frequency_grid();
  const auto base = propagate(s.base_schedule(), s.stepper);
  const auto fa = filter_functions(base, channels, grid);
  ctx.write_csv("filterfn_base.csv", filter_columns(channels), filter_rows(fa));
  if (!s.transform) return kSuccess;

  const FrameTransform tr = s.frame_transform();
  bool endpoints_ok = true;
  std::ostringstream summary;
  summary << ctx.endpoint_line(tr, endpoints_ok);
  const auto moved = propagate(transform_schedule(s.base_schedule(), tr), s.stepper);
  const auto fb = filter_functions(moved, channels, grid);
  ctx.write_csv("filterfn_transformed.csv", filter_columns(channels), filter_rows(fb));
  bool within = true;
  for (std::size_t q = 0; q < channels.size(); ++q) {
    double peak = 0.0;
    double diff = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      peak = std::max(peak, fa[q].filter[k]);
      diff = std::max(diff, std::abs(fa[q].filter[k] - fb[q].filter[k]));
    }
    const double rel = peak > 0.0 ? diff / peak : diff;
    const bool ok = rel < s.tolerances.filter;
    within = within && ok;
    summary << "filter_mismatch " << channels[q].label << " " << format_double(rel)
            << (ok ? " ok" : " FAIL") << "\n";
  }
  ctx.write_report("filterfn_summary.txt", summary.str());
  if (!endpoints_ok) return kValidationError;
  return within ? kSuccess : kNumericalFailure;
}

std::vector<std::vector<double>> phase_rows(const AbelianPhaseDecomposition& d) {
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < d.times.size(); ++k) {
    rows.push_back({d.times[k], d.geometric_path[k], d.dynamical_path[k], d.total_path[k]});
  }
  return rows;
}

int cmd_phases(Context& ctx) {
  const Scenario& s = ctx.scenario;
  const CVector state = s.cyclic_state();
  const std::vector<std::string> cols{"t", "geometric", "dynamical", "total"};
  const auto base = propagate(s.base_schedule(), s.stepper);
  const auto da = abelian_decompose(base, state);
  ctx.write_csv("phases_base.csv", cols, phase_rows(da));
  std::ostringstream summary;
  summary << "base geometric " << format_double(wrap_phase(da.geometric)) << "\n"
          << "base dynamical " << format_double(wrap_phase(da.dynamical)) << "\n"
          << "base total " << format_double(wrap_phase(da.total)) << "\n";
  bool ok = true;
  if (s.transform) {
    const FrameTransform tr = s.frame_transform();
    summary << ctx.endpoint_line(tr, ok);
    const auto moved = propagate(transform_schedule(s.base_schedule(), tr), s.stepper);
    const auto db = abelian_decompose(moved, state);
    ctx.write_csv("phases_transformed.csv", cols, phase_rows(db));
    const double drift = std::abs(wrap_phase(db.total - da.total));
    summary << "transformed geometric " << format_double(wrap_phase(db.geometric)) << "\n"
            << "transformed dynamical " << format_double(wrap_phase(db.dynamical)) << "\n"
            << "transformed total " << format_double(wrap_phase(db.total)) << "\n"
            << "total_phase_drift " << format_double(drift)
            << (drift < s.tolerances.phase ? " ok" : " FAIL") << "\n";
    ctx.write_report("phases_summary.txt", summary.str());
    if (!ok) return kValidationError;
    return drift < s.tolerances.phase ? kSuccess : kNumericalFailure;
  }
  ctx.write_report("phases_summary.txt", summary.str());
  return kSuccess;
}

int cmd_calibrate(Context& ctx) {
  const Scenario& s = ctx.scenario;
  ctx.require_transform();
  const CVector state = s.cyclic_state();
  const auto& cal = s.calibration;
  const CalibrationResult r =
      zero_phase(s.family(s.steps), state, cal.target, cal.bracket, cal.tolerance, s.stepper);
  const double fine = phase_objective(s.family(4 * s.steps), r.amplitude, state, cal.target,
                                      s.stepper);
  std::ostringstream summary;
  summary << "target " << (cal.target == PhaseTarget::geometric ? "geometric" : "dynamical")
          << "\n"
          << "amplitude " << format_double(r.amplitude) << "\n"
          << "residual " << format_double(r.residual) << "\n"
          << "iterations " << r.iterations << "\n"
          << "evaluations " << r.evaluations << "\n"
          << "residual_at_4x_steps " << format_double(fine) << "\n";
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < r.brackets.size(); ++i) {
    rows.push_back({static_cast<double>(i), r.brackets[i].first, r.brackets[i].second});
  }
  ctx.write_csv("calibration_brackets.csv", {"iteration", "lo", "hi"}, rows);
  ctx.write_report("calibration.txt", summary.str());
  return kSuccess;
}

int cmd_montecarlo(Context& ctx) {
  const Scenario& s = ctx.scenario;
  const int steps = s.montecarlo.steps.value_or(s.steps);
  const auto channels = s.noise_channels();
  const ControlSchedule base = s.base_schedule(steps);
  std::optional<ControlSchedule> moved;
  if (s.transform) {
    const FrameTransform tr = s.frame_transform();
    bool ok = true;
    const std::string line = ctx.endpoint_line(tr, ok);
    if (!ok) throw ValidationError(line);
    moved = transform_schedule(base, tr);
  }
  const auto traj = propagate(base, s.stepper);
  const auto ff = filter_functions(traj, channels, s.frequency_grid());
  const double prefactor = infidelity_prefactor(s.basis()->dimension());
  const InfidelityEstimate unit = avg_infidelity(ff, channels);

  std::vector<std::string> cols{"strength", "predicted", "measured", "stderr", "ratio"};
  if (moved) {
    cols.push_back("measured_transformed");
    cols.push_back("stderr_transformed");
  }
  std::vector<std::vector<double>> rows;
  for (double strength : s.montecarlo.strengths) {
    std::vector<NoiseChannel> scaled = channels;
    for (auto& c : scaled) c.psd = c.psd.scaled(strength);
    EnsembleOptions opt;
    opt.shots = s.montecarlo.shots;
    opt.seed = s.montecarlo.seed;
    opt.threads = s.montecarlo.threads;
    opt.stepper = s.stepper;
    const EnsembleResult m = ensemble_infidelity(base, scaled, opt);
    const double predicted = prefactor * strength * unit.value;
    std::vector<double> row{strength, predicted, m.mean, m.standard_error,
                            predicted > 0.0 ? m.mean / predicted : NAN};
    if (moved) {
      const EnsembleResult mt = ensemble_infidelity(*moved, scaled, opt);
      row.push_back(mt.mean);
      row.push_back(mt.standard_error);
    }
    rows.push_back(std::move(row));
  }
  ctx.write_csv("montecarlo.csv", cols, rows,
                {"rng=" + std::string(kRngName) + " seed=" + std::to_string(s.montecarlo.seed) +
                     " shots=" + std::to_string(s.montecarlo.shots),
                 "predicted = (2/N) (1/2pi) sum_q int S_q F_q; truncation bound per unit strength " +
                     format_double(prefactor * unit.truncation_bound)});
  return kSuccess;
}

std::vector<std::vector<double>> bloch_rows(const Trajectory& traj, const CVector& state) {
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const CVector psi = traj.unitaries[k] * state;
    std::vector<double> r{traj.times[k]};
    for (int i = 0; i < traj.basis->size(); ++i) {
      r.push_back(psi.dot(traj.basis->generator(i) * psi).real());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

int cmd_bloch_path(Context& ctx) {
  const Scenario& s = ctx.scenario;
  if (s.system != SystemKind::su2) throw ValidationError("bloch-path needs an su2 scenario");
  const CVector state = s.cyclic_state();
  const std::vector<std::string> cols{"t", "x", "y", "z"};
  ctx.write_csv("bloch_base.csv", cols,
                bloch_rows(propagate(s.base_schedule(), s.stepper), state));
  if (s.transform) {
    const FrameTransform tr = s.frame_transform();
    ctx.write_csv("bloch_transformed.csv", cols,
                  bloch_rows(propagate(transform_schedule(s.base_schedule(), tr), s.stepper),
                             state));
  }
  return kSuccess;
}

int cmd_verify(Context& ctx) {
  const Scenario& s = ctx.scenario;
  ctx.require_transform();
  const auto channels = s.noise_channels();
  const FrameTransform tr = s.frame_transform();
  bool endpoints_ok = true;
  std::ostringstream report;
  report << ctx.endpoint_line(tr, endpoints_ok);
  const auto conditions = check_conditions(tr, channels, 1001, s.tolerances.conditions);
  bool ok = true;
  for (const auto& c : conditions) {
    report << "conditions " << c.label << " eigenvector " << format_double(c.eigenvector_violation)
           << " eigenvalue " << format_double(c.eigenvalue) << " commutator "
           << format_double(c.commutator_violation) << " nullspace "
           << format_double(c.nullspace_violation) << (c.passed() ? " ok" : " FAIL") << "\n";
    ok = ok && c.passed();
  }
  const EquivalenceReport eq =
      verify_equivalence(s.base_schedule(), tr, channels, s.frequency_grid(), s.stepper);
  const bool gate_ok = eq.gate_distance < s.tolerances.gate;
  report << "gate_distance " << format_double(eq.gate_distance) << (gate_ok ? " ok" : " FAIL")
         << "\n"
         << "integrand_mismatch " << format_double(eq.integrand_mismatch) << "\n"
         << "sensitivity_mismatch " << format_double(eq.sensitivity_mismatch) << "\n";
  for (const auto& m : eq.channels) {
    const bool f_ok = m.relative() < s.tolerances.filter;
    report << "filter_mismatch " << m.label << " " << format_double(m.relative())
           << (f_ok ? " ok" : " FAIL") << "\n";
    ok = ok && f_ok;
  }
  ok = ok && gate_ok;
  report << "verdict " << (endpoints_ok && ok ? "PASS" : "FAIL") << "\n";
  ctx.write_report("verify.txt", report.str());
  if (!endpoints_ok) return kValidationError;
  return ok ? kSuccess : kNumericalFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gatequiv: geometric/dynamical gate equivalence toolkit"};
  app.require_subcommand(1);
  Options options;
  std::uint64_t seed = 0;
  int grid_points = 0;

  using Command = std::function<int(Context&)>;
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const std::string& name, const std::string& help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", options.config, "scenario file (JSON)")->required();
    sub->add_option("--out", options.out_dir, "output directory");
    sub->add_option("--seed", seed, "override the Monte Carlo seed");
    sub->add_option("--grid-points", grid_points, "override the frequency grid size");
    sub->add_flag("--quiet", options.quiet, "suppress console output");
    commands.emplace_back(sub, std::move(fn));
  };
  add("filterfn", "filter functions of the base and transformed schedules", cmd_filterfn);
  add("phases", "geometric and dynamical phase paths", cmd_phases);
  add("calibrate", "tune the frame amplitude until the target phase vanishes", cmd_calibrate);
  add("montecarlo", "Monte Carlo infidelity against the filter-function prediction",
      cmd_montecarlo);
  add("bloch-path", "Bloch-sphere path of the cyclic state", cmd_bloch_path);
  add("verify", "full equivalence report", cmd_verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kSuccess : kValidationError;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    if (sub->count("--seed")) options.seed = seed;
    if (sub->count("--grid-points")) options.grid_points = grid_points;
    try {
      Context ctx(options, out);
      return fn(ctx);
    } catch (const ValidationError& e) {
      err << "validation error: " << e.what() << "\n";
      return kValidationError;
    } catch (const std::invalid_argument& e) {
      err << "validation error: " << e.what() << "\n";
      return kValidationError;
    } catch (const std::domain_error& e) {
      err << "numerical failure: " << e.what() << "\n";
      return kNumericalFailure;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kNumericalFailure;
    }
  }
  return kValidationError;
}

}  // namespace gatequiv::tools
