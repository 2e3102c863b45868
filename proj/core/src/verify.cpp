#include "ceseplast/verify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ceseplast/analysis.hpp"
#include "ceseplast/errors.hpp"
#include "ceseplast/oracle.hpp"
#include "ceseplast/runner.hpp"
#include "ceseplast/scenario.hpp"
#include "ceseplast/system.hpp"

namespace ceseplast {

bool Check::passed() const {
  if (!std::isfinite(measured)) return false;
  switch (kind) {
    case Kind::Relative: return std::abs(measured - expected) <= tolerance * std::abs(expected);
    case Kind::Absolute: return std::abs(measured - expected) <= tolerance;
    case Kind::Minimum: return measured >= expected;
    case Kind::Maximum: return measured <= expected;
  }
  return false;
}

std::string Check::describe() const {
  char buf[256];
  switch (kind) {
    case Kind::Relative:
      std::snprintf(buf, sizeof buf, "%s: measured %.6g, expected %.6g +/- %.3g%% (%+.3f%%)",
                    name.c_str(), measured, expected, 100.0 * tolerance,
                    expected != 0.0 ? 100.0 * (measured - expected) / std::abs(expected) : 0.0);
      break;
    case Kind::Absolute:
      std::snprintf(buf, sizeof buf, "%s: measured %.6g, expected %.6g +/- %.3g", name.c_str(),
                    measured, expected, tolerance);
      break;
    case Kind::Minimum:
      std::snprintf(buf, sizeof buf, "%s: measured %.6g, required >= %.6g", name.c_str(),
                    measured, expected);
      break;
    case Kind::Maximum:
      std::snprintf(buf, sizeof buf, "%s: measured %.6g, required <= %.6g", name.c_str(),
                    measured, expected);
      break;
  }
  return buf;
}

bool SuiteResult::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return !checks.empty();
}

MeshLevel elastic_pulse_level(std::size_t cells, double length, double dt, double amplitude,
                              double width, double center, const MaterialProperties& mat) {
  const double c = elastic_wave_speed(mat);
  const double rho0 = mat.rest_density;
  const double shear = 4.0 / 3.0 * mat.shear_modulus;
  MeshLevel level = MeshLevel::uniform(cells, length, dt, {rho0, 0.0, 0.0}, mat);
  for (std::size_t k = 0; k < level.nodes.size(); ++k) {
    const double d = std::remainder(level.position(k) - center, length);
    const double v = amplitude * std::exp(-d * d / (width * width));
    const double vx = -2.0 * d / (width * width) * v;
    const double rho = rho0 * (1.0 + v / c);
    const double s11 = -shear * v / c;
    const double rho_x = rho0 * vx / c;
    const double s_x = -shear * vx / c;
    level.nodes[k].u = to_conserved({rho, v, s11});
    level.nodes[k].ux = Vec3(rho_x, rho_x * v + rho * vx, rho_x * s11 + rho * s_x);
  }
  return level;
}

ConvergenceStudy convergence_study(const MaterialProperties& mat,
                                   const std::vector<std::size_t>& cells, double cfl,
                                   double alpha, std::size_t coarse_steps) {
  if (cells.size() < 2) throw std::invalid_argument("convergence_study: need two or more grids");
  constexpr double length = 1.0;
  constexpr double amplitude = 0.01;
  constexpr double width = 0.15;
  constexpr double center = 0.3;
  const double c = elastic_wave_speed(mat);
  const double t_end =
      static_cast<double>(coarse_steps) * cfl * (length / static_cast<double>(cells[0])) / c;

  SolverParams params;
  params.alpha = alpha;
  ConvergenceStudy study;
  for (const std::size_t n : cells) {
    const double dt = cfl * (length / static_cast<double>(n)) / c;
    MeshLevel end = run(elastic_pulse_level(n, length, dt, amplitude, width, center, mat), t_end,
                        BoundaryPolicy::periodic(), params, mat);
    std::vector<double> num, exact;
    for (std::size_t k = 0; k < end.nodes.size(); ++k) {
      num.push_back(to_primitive(end.nodes[k].u).v);
      const auto profile = [&](double x) {
        const double d = std::remainder(x - center, length);
        return amplitude * std::exp(-d * d / (width * width));
      };
      exact.push_back(oracle::dalembert(profile, c, end.position(k), end.t));
    }
    study.levels.push_back({n, l2_difference(num, exact, 2.0 * end.dx)});
  }
  for (std::size_t i = 1; i < study.levels.size(); ++i) {
    const double ratio = static_cast<double>(study.levels[i].cells) /
                         static_cast<double>(study.levels[i - 1].cells);
    study.orders.push_back(
        observed_order(study.levels[i - 1].error, study.levels[i].error, ratio));
  }
  return study;
}

namespace {

const OracleDelta* delta(const RunReport& r, const std::string& quantity) {
  for (const auto& d : r.deltas) {
    if (d.quantity == quantity) return &d;
  }
  return nullptr;
}

void add_delta(SuiteResult& s, const RunReport& r, const std::string& quantity, double tol) {
  const OracleDelta* d = delta(r, quantity);
  if (d) {
    s.checks.push_back({quantity, d->measured, d->expected, tol});
  } else {
    s.checks.push_back({quantity + " (not measured)", NAN, 0.0, tol});
  }
}

SuiteResult speeds() {
  SuiteResult s{"speeds", {}};
  const RunResult r = run_scenario(find_builtin("impact40").config);
  add_delta(s, r.report, "elastic_front_speed", 0.02);
  add_delta(s, r.report, "plastic_front_speed_1", 0.02);
  return s;
}

SuiteResult plateaus() {
  SuiteResult s{"plateaus", {}};
  ScenarioConfig cfg = find_builtin("impact40").config;
  const RunResult rr = run_scenario(cfg);
  add_delta(s, rr.report, "precursor_t11", 0.05);
  add_delta(s, rr.report, "plateau_t11", 0.05);
  add_delta(s, rr.report, "plateau_pressure", 0.05);
  add_delta(s, rr.report, "plateau_density", 0.001);
  add_delta(s, rr.report, "interface_velocity", 0.02);

  cfg.solver.source_mode = SourceMode::Direct;
  const RunResult direct = run_scenario(cfg);
  const OracleDelta* a = delta(rr.report, "plateau_t11");
  const OracleDelta* b = delta(direct.report, "plateau_t11");
  s.checks.push_back({"direct_vs_radial_return_plateau_t11", b ? b->measured : NAN,
                      a ? a->measured : NAN, 0.03});
  return s;
}

SuiteResult convergence() {
  SuiteResult s{"convergence", {}};
  const ConvergenceStudy study =
      convergence_study(MaterialProperties::copper(), {50, 100, 200, 400}, 0.6, 1.0);
  for (std::size_t i = 0; i < study.orders.size(); ++i) {
    s.checks.push_back({"order_" + std::to_string(study.levels[i].cells) + "_" +
                            std::to_string(study.levels[i + 1].cells),
                        study.orders[i], 1.8, 0.0, Check::Kind::Minimum});
  }
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"speeds", "plateaus", "convergence"};
  return names;
}

SuiteResult run_suite(const std::string& name) {
  if (name == "speeds") return speeds();
  if (name == "plateaus") return plateaus();
  if (name == "convergence") return convergence();
  throw ConfigError("unknown verification suite \"" + name + "\"");
}

}  // namespace ceseplast
