#pragma once

#include <string>
#include <vector>

#include "ceseplast/boundary.hpp"
#include "ceseplast/cese.hpp"
#include "ceseplast/config.hpp"

namespace ceseplast {

/// Initial level plus the boundary treatment it is meant to run with.
struct Setup {
  MeshLevel initial;
  BoundaryPolicy bc;
};

/// Two bars of the same metal meeting at `interface_position`: the left one
/// moving at `impact_speed`, the right one at rest, both unstressed.
MeshLevel build_impact_ic(const ScenarioConfig& cfg);

/// A moving bar of `bar_length` starting at the left end (a free surface)
/// against a stationary bar that leaves through a non-reflective right end.
Setup build_finite_bar_ic(const ScenarioConfig& cfg);

/// Bar at rest whose left end carries T11 = -(F0/A) sin(omega t).
Setup build_ultrasonic_ic(const ScenarioConfig& cfg);

/// Dispatch on cfg.scenario.kind.
Setup build_setup(const ScenarioConfig& cfg);

struct BuiltinScenario {
  std::string name;
  std::string summary;
  ScenarioConfig config;
};

/// Ready-made configurations for the impact, multi-yield, finite bar and
/// ultrasonic experiments.
const std::vector<BuiltinScenario>& builtin_scenarios();

/// Throws ConfigError when no built-in has that name.
const BuiltinScenario& find_builtin(const std::string& name);

/// Copper with the first yield and staged hardening used by the multi-yield
/// impacts: `stages` is 1, 2 or 4.
MaterialProperties multi_yield_copper(int stages);

}  // namespace ceseplast
