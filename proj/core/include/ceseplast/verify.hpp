#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ceseplast/cese.hpp"
#include "ceseplast/material.hpp"

namespace ceseplast {

/// One measured quantity against its target. `tolerance` is relative to
/// |expected| unless `absolute` is set; `minimum` checks measured >= expected.
struct Check {
  enum class Kind { Relative, Absolute, Minimum, Maximum };

  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Kind kind = Kind::Relative;

  bool passed() const;
  std::string describe() const;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

/// Level holding a right-running small-amplitude elastic Gaussian pulse in
/// v (and the matching rho, S11 and slopes) about the rest state.
MeshLevel elastic_pulse_level(std::size_t cells, double length, double dt, double amplitude,
                              double width, double center, const MaterialProperties& mat);

struct ConvergenceLevel {
  std::size_t cells = 0;
  double error = 0.0;  // L2 error of v against the travelling pulse
};

struct ConvergenceStudy {
  std::vector<ConvergenceLevel> levels;
  std::vector<double> orders;  // between successive levels
};

/// Periodic refinement study of the pulse above at fixed CFL; every grid is
/// run to the same time, `coarse_steps` steps of the coarsest grid.
ConvergenceStudy convergence_study(const MaterialProperties& mat,
                                   const std::vector<std::size_t>& cells, double cfl,
                                   double alpha, std::size_t coarse_steps = 100);

/// Built-in acceptance suites: "speeds", "plateaus" or "convergence".
SuiteResult run_suite(const std::string& name);

const std::vector<std::string>& suite_names();

}  // namespace ceseplast
