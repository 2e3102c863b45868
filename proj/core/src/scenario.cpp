#include "ceseplast/scenario.hpp"

#include "ceseplast/errors.hpp"

namespace ceseplast {

namespace {

MeshLevel rest_level(const ScenarioConfig& cfg) {
  const auto& m = cfg.material;
  return MeshLevel::uniform(cfg.grid.cells, cfg.grid.length, cfg.time.dt,
                            {m.rest_density, 0.0, 0.0}, m);
}

/// Set v on every node left of `edge`.
void set_moving_segment(MeshLevel& level, double edge, double speed,
                        const MaterialProperties& mat) {
  const ConservedState moving = to_conserved({mat.rest_density, speed, 0.0});
  for (std::size_t k = 0; k < level.nodes.size(); ++k) {
    if (level.position(k) < edge) level.nodes[k].u = moving;
  }
}

ScenarioConfig base_config(const MaterialProperties& mat, double length, std::size_t cells,
                           double dt, double t_end) {
  ScenarioConfig c;
  c.material = mat;
  c.grid = {length, cells};
  c.time = {dt, t_end, 1.0};
  return c;
}

}  // namespace

MeshLevel build_impact_ic(const ScenarioConfig& cfg) {
  if (cfg.scenario.kind != ScenarioKind::Impact) {
    throw ConfigError("build_impact_ic: scenario kind is " +
                      std::string(to_string(cfg.scenario.kind)));
  }
  const double xi = cfg.scenario.interface_position;
  if (!(xi > 0.0 && xi < cfg.grid.length)) {
    throw ConfigError("scenario.interface_position: outside the domain");
  }
  MeshLevel level = rest_level(cfg);
  set_moving_segment(level, xi, cfg.scenario.impact_speed, cfg.material);
  return level;
}

Setup build_finite_bar_ic(const ScenarioConfig& cfg) {
  if (cfg.scenario.kind != ScenarioKind::FiniteBarImpact) {
    throw ConfigError("build_finite_bar_ic: scenario kind is " +
                      std::string(to_string(cfg.scenario.kind)));
  }
  const double bar = cfg.scenario.bar_length;
  if (!(bar > 0.0 && bar <= cfg.grid.length)) {
    throw ConfigError("scenario.bar_length: must lie in (0, grid.length]");
  }
  Setup s{rest_level(cfg), {}};
  set_moving_segment(s.initial, bar, cfg.scenario.impact_speed, cfg.material);
  s.bc.left.kind = BoundaryKind::FreeSurface;
  s.bc.right.kind = BoundaryKind::NonReflective;
  return s;
}

Setup build_ultrasonic_ic(const ScenarioConfig& cfg) {
  if (cfg.scenario.kind != ScenarioKind::Ultrasonic) {
    throw ConfigError("build_ultrasonic_ic: scenario kind is " +
                      std::string(to_string(cfg.scenario.kind)));
  }
  Setup s{rest_level(cfg), {}};
  s.bc.left = {BoundaryKind::TractionForced, cfg.scenario.force_amplitude, cfg.scenario.omega};
  s.bc.right.kind = BoundaryKind::NonReflective;
  return s;
}

Setup build_setup(const ScenarioConfig& cfg) {
  switch (cfg.scenario.kind) {
    case ScenarioKind::Impact: return {build_impact_ic(cfg), {}};
    case ScenarioKind::FiniteBarImpact: return build_finite_bar_ic(cfg);
    case ScenarioKind::Ultrasonic: return build_ultrasonic_ic(cfg);
  }
  throw ConfigError("scenario.kind: unrecognized");
}

MaterialProperties multi_yield_copper(int stages) {
  // Tangent moduli fall stage by stage so every hardening segment launches
  // its own, slower plastic front.
  static const HardeningStage table[] = {
      {60.0e6, 2.0e11}, {80.0e6, 1.2e11}, {100.0e6, 7.0e10}, {120.0e6, 3.0e10}};
  if (stages != 1 && stages != 2 && stages != 4) {
    throw std::invalid_argument("multi_yield_copper: stages must be 1, 2 or 4");
  }
  MaterialProperties m = MaterialProperties::copper();
  m.initial_yield = table[0].yield_stress;
  m.hardening_stages.assign(table, table + stages);
  return m;
}

const std::vector<BuiltinScenario>& builtin_scenarios() {
  static const std::vector<BuiltinScenario> all = [] {
    std::vector<BuiltinScenario> v;
    const auto copper = MaterialProperties::copper();

    {
      ScenarioConfig c = base_config(copper, 2.0, 400, 0.6e-6, 0.17e-3);
      c.scenario.kind = ScenarioKind::Impact;
      c.scenario.impact_speed = 40.0;
      c.scenario.interface_position = 1.0;
      c.output.snapshot_every_steps = 20;
      c.output.directory = "out/impact40";
      v.push_back({"impact40", "40 m/s copper-on-copper impact, perfectly plastic", c});
    }

    const char* case_names[] = {"multiyield1", "multiyield2", "multiyield4"};
    const int case_stages[] = {1, 2, 4};
    for (int i = 0; i < 3; ++i) {
      ScenarioConfig c = base_config(multi_yield_copper(case_stages[i]), 1.98, 3000, 1.3e-7,
                                     1.8e-4);
      c.scenario.kind = ScenarioKind::Impact;
      c.scenario.impact_speed = 30.0;
      c.scenario.interface_position = 0.9;
      c.output.snapshot_every_steps = 50;
      c.output.directory = std::string("out/") + case_names[i];
      v.push_back({case_names[i],
                   "30 m/s impact, " + std::to_string(case_stages[i]) +
                       " hardening stage(s) from 60 MPa",
                   c});
    }

    {
      ScenarioConfig c = base_config(multi_yield_copper(2), 1.32, 2000, 1.3e-7, 1.8e-4);
      c.scenario.kind = ScenarioKind::FiniteBarImpact;
      c.scenario.impact_speed = 30.0;
      c.scenario.bar_length = 0.1;
      c.output.snapshot_every_steps = 100;
      c.output.directory = "out/finite_bar";
      v.push_back({"finite_bar", "short free-ended bar striking a long bar, two stages", c});
    }

    for (const bool high : {true, false}) {
      ScenarioConfig c = base_config(copper, 2.0, 400, 0.6e-6, 0.4e-3);
      c.scenario.kind = ScenarioKind::Ultrasonic;
      c.scenario.force_amplitude = high ? 2.0e8 : 5.0e7;
      c.scenario.omega = 1.0e5;
      c.scenario.probe_position = 0.3;
      c.solver.alpha = 0.0;  // smooth forcing, undamped scheme
      c.output.snapshot_every_steps = 50;
      c.output.directory = high ? "out/ultrasonic" : "out/ultrasonic_subyield";
      v.push_back({high ? "ultrasonic" : "ultrasonic_subyield",
                   high ? "sinusoidal end load at the elastic limit (F0/A = 200 MPa, 1e5 rad/s)"
                        : "sinusoidal end load below yield (F0/A = 50 MPa, 1e5 rad/s)",
                   c});
    }
    for (auto& b : v) b.config.validate();
    return v;
  }();
  return all;
}

const BuiltinScenario& find_builtin(const std::string& name) {
  for (const auto& b : builtin_scenarios()) {
    if (b.name == name) return b;
  }
  throw ConfigError("no built-in scenario named \"" + name + "\"");
}

}  // namespace ceseplast
