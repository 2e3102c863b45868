#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ceseplast/cese.hpp"
#include "ceseplast/material.hpp"

namespace ceseplast {

enum class ScenarioKind { Impact, FiniteBarImpact, Ultrasonic };

const char* to_string(ScenarioKind k) noexcept;
ScenarioKind scenario_kind_from_string(std::string_view name);

struct GridConfig {
  double length = 0.0;  // [m]
  std::size_t cells = 0;

  double dx() const { return length / static_cast<double>(cells); }
  bool operator==(const GridConfig&) const = default;
};

struct TimeConfig {
  double dt = 0.0;     // level spacing [s]
  double t_end = 0.0;  // [s]
  double cfl_limit = 1.0;

  bool operator==(const TimeConfig&) const = default;
};

/// Kind-specific parameters. Fields not used by `kind` stay at zero and are
/// not written back out.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Impact;
  double impact_speed = 0.0;        // impact, finite_bar_impact [m/s]
  double interface_position = 0.0;  // impact [m]
  double bar_length = 0.0;          // finite_bar_impact [m]
  double force_amplitude = 0.0;     // ultrasonic, F0 / A [Pa]
  double omega = 0.0;               // ultrasonic [rad/s]
  double probe_position = 0.0;      // ultrasonic, velocity probe [m]; 0 disables it

  bool operator==(const ScenarioSpec&) const = default;
};

enum class SnapshotField { X, Rho, V, S11, P, T11, Gamma };

const char* to_string(SnapshotField f) noexcept;
SnapshotField snapshot_field_from_string(std::string_view name);

/// All columns, in file order.
const std::vector<SnapshotField>& all_snapshot_fields();

struct OutputConfig {
  std::size_t snapshot_every_steps = 0;  // 0: initial and final level only
  std::string directory = "out";
  std::vector<SnapshotField> fields = all_snapshot_fields();

  bool operator==(const OutputConfig&) const = default;
};

struct ScenarioConfig {
  MaterialProperties material = MaterialProperties::copper();
  GridConfig grid;
  TimeConfig time;
  SolverParams solver;
  ScenarioSpec scenario;
  OutputConfig output;

  /// Solver parameters with the time block's CFL limit folded in.
  SolverParams solver_params() const;

  /// Throws ConfigError naming the offending key.
  void validate() const;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parse JSON text. Unknown keys, missing required keys and type mismatches
/// raise ConfigError with the dotted key path in the message.
ScenarioConfig parse_config(std::string_view text);

/// As parse_config, applying `overrides` ("block.key=value") first.
ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides);

ScenarioConfig read_config(const std::string& path,
                           const std::vector<std::string>& overrides = {});

/// Canonical JSON text; parse_config(to_config_text(c)) == c.
std::string to_config_text(const ScenarioConfig& cfg);

}  // namespace ceseplast
