#include "ceseplast/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ceseplast/errors.hpp"

namespace ceseplast {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError("config: " + key + ": " + what);
}

/// Walks one JSON object, remembering which keys were consumed so leftovers
/// can be reported as unknown.
class Block {
 public:
  Block(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  std::string key(const std::string& name) const {
    return path_.empty() ? name : path_ + "." + name;
  }

  bool has(const std::string& name) const { return j_.contains(name); }

  const json& at(const std::string& name) {
    seen_.insert(name);
    auto it = j_.find(name);
    if (it == j_.end()) fail(key(name), "missing required key");
    return *it;
  }

  double number(const std::string& name) {
    const json& v = at(name);
    if (!v.is_number()) fail(key(name), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(key(name), "expected a finite number");
    return d;
  }

  double number(const std::string& name, double fallback) {
    return has(name) ? number(name) : fallback;
  }

  std::size_t count(const std::string& name) {
    const json& v = at(name);
    if (!v.is_number_unsigned()) fail(key(name), "expected a non-negative integer");
    return v.get<std::size_t>();
  }

  std::size_t count(const std::string& name, std::size_t fallback) {
    return has(name) ? count(name) : fallback;
  }

  std::string text(const std::string& name) {
    const json& v = at(name);
    if (!v.is_string()) fail(key(name), "expected a string");
    return v.get<std::string>();
  }

  Block child(const std::string& name) { return Block(at(name), key(name)); }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(key(it.key()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

MaterialProperties parse_material(Block b) {
  MaterialProperties m;
  m.bulk_modulus = b.number("k");
  m.shear_modulus = b.number("mu");
  m.youngs_modulus = b.number("E");
  m.rest_density = b.number("rho0");
  m.initial_yield = b.number("sigma_y");
  m.reference_pressure = b.number("p0", 0.0);
  m.hardening_stages.clear();
  if (b.has("hardening")) {
    const json& list = b.at("hardening");
    const std::string key = b.key("hardening");
    if (!list.is_array() || list.empty()) fail(key, "expected a non-empty array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const json& e = list[i];
      const std::string ek = key + "[" + std::to_string(i) + "]";
      // A bare number is a yield stress with the default modulus.
      if (e.is_number()) {
        m.hardening_stages.push_back({e.get<double>(), kDefaultStageModulus});
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m.hardening_stages.push_back({e[0].get<double>(), e[1].get<double>()});
      } else {
        fail(ek, "expected a yield stress or a [yield_stress, modulus] pair");
      }
    }
  } else {
    m.hardening_stages.push_back({m.initial_yield, 0.0});
  }
  b.finish();
  return m;
}

SolverParams parse_solver(Block b) {
  SolverParams s;
  s.alpha = b.number("alpha", s.alpha);
  if (b.has("source_mode")) {
    const std::string mode = b.text("source_mode");
    if (mode == "direct") {
      s.source_mode = SourceMode::Direct;
    } else if (mode == "radial_return") {
      s.source_mode = SourceMode::RadialReturn;
    } else {
      fail(b.key("source_mode"), "expected \"direct\" or \"radial_return\", got \"" + mode + "\"");
    }
  }
  s.newton_tol = b.number("newton_tol", s.newton_tol);
  if (b.has("newton_max_iter")) {
    const std::size_t n = b.count("newton_max_iter");
    if (n < 1 || n > 10000) fail(b.key("newton_max_iter"), "must lie in [1, 10000]");
    s.newton_max_iter = static_cast<int>(n);
  }
  b.finish();
  return s;
}

ScenarioSpec parse_scenario(Block b) {
  ScenarioSpec s;
  const std::string kind = b.text("kind");
  try {
    s.kind = scenario_kind_from_string(kind);
  } catch (const std::invalid_argument&) {
    fail(b.key("kind"), "unrecognized scenario kind \"" + kind + "\"");
  }
  switch (s.kind) {
    case ScenarioKind::Impact:
      s.impact_speed = b.number("impact_speed");
      s.interface_position = b.number("interface_position");
      break;
    case ScenarioKind::FiniteBarImpact:
      s.impact_speed = b.number("impact_speed");
      s.bar_length = b.number("bar_length");
      break;
    case ScenarioKind::Ultrasonic:
      s.force_amplitude = b.number("force_amplitude");
      s.omega = b.number("omega");
      s.probe_position = b.number("probe_position", 0.0);
      break;
  }
  b.finish();
  return s;
}

OutputConfig parse_output(Block b) {
  OutputConfig o;
  o.snapshot_every_steps = b.count("snapshot_every_steps", 0);
  if (b.has("directory")) o.directory = b.text("directory");
  if (b.has("fields")) {
    const json& list = b.at("fields");
    const std::string key = b.key("fields");
    if (!list.is_array()) fail(key, "expected an array of column names");
    std::set<SnapshotField> chosen;
    for (const auto& e : list) {
      if (!e.is_string()) fail(key, "expected column names as strings");
      try {
        chosen.insert(snapshot_field_from_string(e.get<std::string>()));
      } catch (const std::invalid_argument&) {
        fail(key, "unknown column \"" + e.get<std::string>() + "\"");
      }
    }
    chosen.insert(SnapshotField::X);
    o.fields.assign(chosen.begin(), chosen.end());
  }
  b.finish();
  return o;
}

ScenarioConfig from_json(const json& root) {
  Block top(root, "");
  ScenarioConfig cfg;
  cfg.material = parse_material(top.child("material"));

  Block grid = top.child("grid");
  cfg.grid.length = grid.number("length");
  cfg.grid.cells = grid.count("cells");
  grid.finish();

  Block time = top.child("time");
  cfg.time.dt = time.number("dt");
  cfg.time.t_end = time.number("t_end");
  cfg.time.cfl_limit = time.number("cfl_limit", 1.0);
  time.finish();

  if (top.has("solver")) cfg.solver = parse_solver(top.child("solver"));
  cfg.scenario = parse_scenario(top.child("scenario"));
  if (top.has("output")) cfg.output = parse_output(top.child("output"));
  top.finish();

  cfg.validate();
  return cfg;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
}

void apply_override(json& root, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("config: override \"" + assignment + "\" is not KEY=VALUE");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);

  json* node = &root;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string part = path.substr(start, dot - start);
    if (part.empty()) throw ConfigError("config: override key \"" + path + "\" is malformed");
    if (dot == std::string::npos) {
      // Values that are not valid JSON are taken as bare strings.
      json value = json::parse(raw, nullptr, false);
      if (value.is_discarded()) value = raw;
      (*node)[part] = std::move(value);
      return;
    }
    json& next = (*node)[part];
    if (next.is_null()) next = json::object();
    if (!next.is_object()) {
      throw ConfigError("config: override \"" + path + "\": " + path.substr(0, dot) +
                        " is not a block");
    }
    node = &next;
    start = dot + 1;
  }
}

}  // namespace

const char* to_string(ScenarioKind k) noexcept {
  switch (k) {
    case ScenarioKind::Impact: return "impact";
    case ScenarioKind::FiniteBarImpact: return "finite_bar_impact";
    case ScenarioKind::Ultrasonic: return "ultrasonic";
  }
  return "?";
}

ScenarioKind scenario_kind_from_string(std::string_view name) {
  for (auto k : {ScenarioKind::Impact, ScenarioKind::FiniteBarImpact, ScenarioKind::Ultrasonic}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown scenario kind: " + std::string(name));
}

const char* to_string(SnapshotField f) noexcept {
  switch (f) {
    case SnapshotField::X: return "x";
    case SnapshotField::Rho: return "rho";
    case SnapshotField::V: return "v";
    case SnapshotField::S11: return "s11";
    case SnapshotField::P: return "p";
    case SnapshotField::T11: return "t11";
    case SnapshotField::Gamma: return "gamma";
  }
  return "?";
}

const std::vector<SnapshotField>& all_snapshot_fields() {
  static const std::vector<SnapshotField> all = {
      SnapshotField::X,  SnapshotField::Rho, SnapshotField::V,     SnapshotField::S11,
      SnapshotField::P,  SnapshotField::T11, SnapshotField::Gamma};
  return all;
}

SnapshotField snapshot_field_from_string(std::string_view name) {
  for (auto f : all_snapshot_fields()) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown snapshot column: " + std::string(name));
}

SolverParams ScenarioConfig::solver_params() const {
  SolverParams p = solver;
  p.cfl_limit = time.cfl_limit;
  return p;
}

void ScenarioConfig::validate() const {
  try {
    material.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!(grid.length > 0.0)) fail("grid.length", "must be positive");
  if (grid.cells < 8) fail("grid.cells", "must be at least 8");
  if (!(time.dt > 0.0)) fail("time.dt", "must be positive");
  if (!(time.t_end >= 0.0)) fail("time.t_end", "must be non-negative");
  if (!(time.cfl_limit > 0.0 && time.cfl_limit <= 1.0)) fail("time.cfl_limit", "must lie in (0, 1]");
  if (!(solver.alpha >= 0.0)) fail("solver.alpha", "must be non-negative");
  if (!(solver.newton_tol > 0.0)) fail("solver.newton_tol", "must be positive");

  const double cfl = elastic_wave_speed(material) * time.dt / grid.dx();
  if (cfl > time.cfl_limit) {
    std::ostringstream os;
    os << "CFL " << cfl << " at the elastic wave speed exceeds the limit " << time.cfl_limit;
    fail("time.dt", os.str());
  }

  switch (scenario.kind) {
    case ScenarioKind::Impact:
      if (!(scenario.interface_position > 0.0 && scenario.interface_position < grid.length)) {
        fail("scenario.interface_position", "must lie strictly inside the domain");
      }
      if (!(scenario.impact_speed >= 0.0)) fail("scenario.impact_speed", "must be non-negative");
      break;
    case ScenarioKind::FiniteBarImpact:
      if (!(scenario.bar_length > 0.0 && scenario.bar_length <= grid.length)) {
        fail("scenario.bar_length", "must lie in (0, grid.length]");
      }
      if (!(scenario.impact_speed >= 0.0)) fail("scenario.impact_speed", "must be non-negative");
      break;
    case ScenarioKind::Ultrasonic:
      if (!(scenario.force_amplitude >= 0.0)) {
        fail("scenario.force_amplitude", "must be non-negative");
      }
      if (!(scenario.omega > 0.0)) fail("scenario.omega", "must be positive");
      if (!(scenario.probe_position >= 0.0 && scenario.probe_position < grid.length)) {
        fail("scenario.probe_position", "must lie in [0, grid.length)");
      }
      break;
  }
}

ScenarioConfig parse_config(std::string_view text) { return from_json(parse_json(text)); }

ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  json root = parse_json(text);
  for (const auto& o : overrides) apply_override(root, o);
  return from_json(root);
}

ScenarioConfig read_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str(), overrides);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string to_config_text(const ScenarioConfig& cfg) {
  json stages = json::array();
  for (const auto& s : cfg.material.hardening_stages) {
    stages.push_back(json::array({s.yield_stress, s.modulus}));
  }
  json scenario = {{"kind", to_string(cfg.scenario.kind)}};
  switch (cfg.scenario.kind) {
    case ScenarioKind::Impact:
      scenario["impact_speed"] = cfg.scenario.impact_speed;
      scenario["interface_position"] = cfg.scenario.interface_position;
      break;
    case ScenarioKind::FiniteBarImpact:
      scenario["impact_speed"] = cfg.scenario.impact_speed;
      scenario["bar_length"] = cfg.scenario.bar_length;
      break;
    case ScenarioKind::Ultrasonic:
      scenario["force_amplitude"] = cfg.scenario.force_amplitude;
      scenario["omega"] = cfg.scenario.omega;
      scenario["probe_position"] = cfg.scenario.probe_position;
      break;
  }
  json fields = json::array();
  for (auto f : cfg.output.fields) fields.push_back(to_string(f));

  const json root = {
      {"material",
       {{"k", cfg.material.bulk_modulus},
        {"mu", cfg.material.shear_modulus},
        {"E", cfg.material.youngs_modulus},
        {"rho0", cfg.material.rest_density},
        {"sigma_y", cfg.material.initial_yield},
        {"p0", cfg.material.reference_pressure},
        {"hardening", stages}}},
      {"grid", {{"length", cfg.grid.length}, {"cells", cfg.grid.cells}}},
      {"time", {{"dt", cfg.time.dt}, {"t_end", cfg.time.t_end}, {"cfl_limit", cfg.time.cfl_limit}}},
      {"solver",
       {{"alpha", cfg.solver.alpha},
        {"source_mode", cfg.solver.source_mode == SourceMode::Direct ? "direct" : "radial_return"},
        {"newton_tol", cfg.solver.newton_tol},
        {"newton_max_iter", cfg.solver.newton_max_iter}}},
      {"scenario", scenario},
      {"output",
       {{"snapshot_every_steps", cfg.output.snapshot_every_steps},
        {"directory", cfg.output.directory},
        {"fields", fields}}},
  };
  return root.dump(2) + "\n";
}

}  // namespace ceseplast
