#include "ceseplast/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "ceseplast/oracle.hpp"
#include "ceseplast/scenario.hpp"
#include "ceseplast/system.hpp"

namespace ceseplast {

namespace fs = std::filesystem;

double OracleDelta::relative_error() const {
  return expected != 0.0 ? (measured - expected) / std::abs(expected) : measured;
}

double ProbeSpectrum::distortion() const {
  if (harmonics.size() < 3 || harmonics[0] == 0.0) return 0.0;
  return harmonics[2] / harmonics[0];
}

std::optional<ProbeSpectrum> probe_spectrum(const std::vector<double>& samples, double t0,
                                            double dt, double omega, double arrival,
                                            int harmonics) {
  const double period = 2.0 * std::numbers::pi / omega;
  const double start = arrival + period;
  if (samples.empty() || !(dt > 0.0)) return std::nullopt;
  const double first = std::max(0.0, std::ceil((start - t0) / dt - 1e-9));
  const double t_last = t0 + static_cast<double>(samples.size() - 1) * dt;
  const double t_begin = t0 + first * dt;
  const auto periods = static_cast<std::size_t>(std::floor((t_last - t_begin) / period + 1e-9));
  if (periods == 0) return std::nullopt;
  const auto n = static_cast<std::size_t>(std::llround(static_cast<double>(periods) * period / dt));
  const auto begin = static_cast<std::size_t>(first);
  if (begin + n > samples.size()) return std::nullopt;

  ProbeSpectrum ps;
  ps.t_begin = t_begin;
  ps.periods = periods;
  const std::vector<double> window(samples.begin() + static_cast<std::ptrdiff_t>(begin),
                                   samples.begin() + static_cast<std::ptrdiff_t>(begin + n));
  for (int h = 1; h <= harmonics; ++h) {
    ps.harmonics.push_back(harmonic_amplitude(window, dt, t_begin, omega, h));
  }
  return ps;
}

namespace {

nlohmann::json moments_json(const Moments& m) {
  return {{"mean", m.mean}, {"stddev", m.stddev}};
}

void impact_deltas(const ScenarioConfig& cfg, const Snapshot& last,
                   const std::vector<FrontSummary>& fronts, RunReport& report) {
  const auto& mat = cfg.material;
  const double xi = cfg.scenario.interface_position;
  std::vector<FrontSummary> right, left;
  for (const auto& f : fronts) (f.position > xi ? right : left).push_back(f);
  std::sort(right.begin(), right.end(),
            [](const auto& a, const auto& b) { return a.position > b.position; });
  std::sort(left.begin(), left.end(),
            [](const auto& a, const auto& b) { return a.position < b.position; });
  if (right.empty()) return;

  report.deltas.push_back({"elastic_front_speed", right[0].speed,
                           oracle::linear_wave_speed(mat, 0, 0.0)});
  if (right.size() == mat.stage_count() + 1) {
    for (std::size_t k = 0; k < mat.stage_count(); ++k) {
      report.deltas.push_back({"plastic_front_speed_" + std::to_string(k + 1),
                               right[k + 1].speed,
                               oracle::linear_wave_speed(mat, 1, mat.hardening_stages[k].modulus)});
    }
  }
  if (left.empty()) return;

  report.plateau = plateau_between(last, left.back().position, right.back().position);
  const bool perfectly_plastic = mat.stage_count() == 1 && mat.hardening_stages[0].modulus == 0.0;
  if (!perfectly_plastic || !(cfg.scenario.impact_speed > 0.0)) return;

  const auto pred = oracle::impact_plateaus(cfg.scenario.impact_speed, mat);
  report.deltas.push_back({"plateau_t11", report.plateau->t11.mean, pred.plateau_axial_stress});
  report.deltas.push_back({"plateau_pressure", report.plateau->p.mean, pred.plateau_pressure});
  report.deltas.push_back({"plateau_density", report.plateau->rho.mean, pred.plateau_density});
  report.deltas.push_back(
      {"interface_velocity", report.plateau->v.mean, pred.plateau_particle_velocity});
  if (!pred.elastic_only && right.size() >= 2) {
    const PlateauStats pre = flattest_window(last, right[1].position, right[0].position);
    if (pre.count > 0) {
      report.deltas.push_back({"precursor_t11", pre.t11.mean, pred.precursor_axial_stress});
    }
  }
}

void finite_bar_deltas(const ScenarioConfig& cfg, const std::vector<FrontSummary>& fronts,
                       RunReport& report) {
  const double ce = oracle::linear_wave_speed(cfg.material, 0, 0.0);
  double fastest = 0.0;
  for (const auto& f : fronts) {
    if (f.sign > 0) fastest = std::max(fastest, f.speed);
  }
  if (fastest > 0.0) report.deltas.push_back({"elastic_front_speed", fastest, ce});
  for (const auto& f : fronts) {
    if (f.sign < 0 && f.speed > 0.0) {
      report.deltas.push_back({"unloading_front_speed", f.speed, ce});
    }
  }
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::json fr = nlohmann::json::array();
  for (const auto& f : fronts) {
    fr.push_back({{"speed", f.speed}, {"sign", f.sign}, {"position", f.position}});
  }
  nlohmann::json dl = nlohmann::json::array();
  for (const auto& d : deltas) {
    dl.push_back({{"quantity", d.quantity},
                  {"measured", d.measured},
                  {"expected", d.expected},
                  {"relative_error", d.relative_error()}});
  }
  nlohmann::json j = {{"kind", ceseplast::to_string(kind)},
                      {"steps", steps},
                      {"wall_time", wall_time},
                      {"cfl_max", cfl_max},
                      {"fronts", fr},
                      {"oracle", dl}};
  if (plateau) {
    j["plateau"] = {{"x_begin", plateau->x_begin},     {"x_end", plateau->x_end},
                    {"nodes", plateau->count},         {"rho", moments_json(plateau->rho)},
                    {"v", moments_json(plateau->v)},   {"t11", moments_json(plateau->t11)},
                    {"p", moments_json(plateau->p)}};
  } else {
    j["plateau"] = nullptr;
  }
  if (probe) {
    j["probe"] = {{"position", probe->position},   {"t_begin", probe->t_begin},
                  {"periods", probe->periods},     {"harmonics", probe->harmonics},
                  {"distortion", probe->distortion()}};
  }
  return j.dump(2) + "\n";
}

RunReport build_report(const ScenarioConfig& cfg, const std::vector<Snapshot>& snapshots,
                       std::size_t steps, double wall_time, double cfl_max) {
  RunReport report;
  report.kind = cfg.scenario.kind;
  report.steps = steps;
  report.wall_time = wall_time;
  report.cfl_max = cfl_max;
  if (snapshots.empty()) return report;

  for (const auto& t : detect_fronts(snapshots)) {
    report.fronts.push_back({t.speed, t.sign, t.final_position()});
  }
  const Snapshot& last = *std::max_element(
      snapshots.begin(), snapshots.end(),
      [](const Snapshot& a, const Snapshot& b) { return a.time < b.time; });

  switch (cfg.scenario.kind) {
    case ScenarioKind::Impact: impact_deltas(cfg, last, report.fronts, report); break;
    case ScenarioKind::FiniteBarImpact: finite_bar_deltas(cfg, report.fronts, report); break;
    case ScenarioKind::Ultrasonic: break;
  }
  return report;
}

RunResult run_scenario(const ScenarioConfig& cfg, const RunOutput& out) {
  cfg.validate();
  Setup setup = build_setup(cfg);
  const MaterialProperties& mat = cfg.material;

  RunResult result;
  RunManifest& manifest = result.manifest;
  manifest.config_text = to_config_text(cfg);
  manifest.started = utc_timestamp();

  std::ofstream run_log;
  if (out.directory) {
    fs::create_directories(*out.directory);
    run_log.open(*out.directory / "run.log");
  }
  std::ostream* solver_log = run_log.is_open() ? &run_log : out.log;

  std::size_t last_step = 0;
  auto keep = [&](const MeshLevel& level, std::size_t n) {
    Snapshot snap = make_snapshot(level, mat, n);
    if (out.directory) {
      const std::string name = snapshot_filename(n);
      write_snapshot(snap, *out.directory / name, cfg.output.fields);
      manifest.snapshots.push_back({name, n, level.t});
    }
    if (out.log) *out.log << "snapshot step " << n << " t=" << level.t << " s\n";
    result.snapshots.push_back(std::move(snap));
    last_step = n;
  };

  const bool probing =
      cfg.scenario.kind == ScenarioKind::Ultrasonic && cfg.scenario.probe_position > 0.0;
  if (probing) {
    result.probe = ProbeRecord{setup.initial.t, setup.initial.dt, {}};
    result.probe->v.push_back(
        to_primitive(setup.initial.sample(cfg.scenario.probe_position)).v);
  }

  RunOptions opts;
  opts.snapshot_every = cfg.output.snapshot_every_steps;
  opts.on_snapshot = keep;
  opts.on_step = [&](const MeshLevel& level, std::size_t n, const StepStats& s) {
    manifest.cfl_max = std::max(manifest.cfl_max, s.cfl);
    manifest.steps = n;
    if (probing) {
      result.probe->v.push_back(to_primitive(level.sample(cfg.scenario.probe_position)).v);
    }
  };
  opts.log = solver_log;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    result.final_level = run(std::move(setup.initial), cfg.time.t_end, setup.bc,
                             cfg.solver_params(), mat, opts);
  } catch (const std::exception& e) {
    manifest.status = std::string("failed: ") + e.what();
    manifest.finished = utc_timestamp();
    if (out.directory) manifest.write(*out.directory / "manifest");
    throw;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (manifest.steps > 0 && last_step != manifest.steps) keep(result.final_level, manifest.steps);
  manifest.finished = utc_timestamp();

  result.report = build_report(cfg, result.snapshots, manifest.steps, wall, manifest.cfl_max);
  if (probing) {
    const double arrival = cfg.scenario.probe_position / elastic_wave_speed(mat);
    result.report.probe = probe_spectrum(result.probe->v, result.probe->t0, result.probe->dt,
                                         cfg.scenario.omega, arrival);
    if (result.report.probe) result.report.probe->position = cfg.scenario.probe_position;
  }
  if (out.directory) {
    manifest.write(*out.directory / "manifest");
    std::ofstream rep(*out.directory / "report.json");
    rep << result.report.to_json();
  }
  return result;
}

}  // namespace ceseplast
