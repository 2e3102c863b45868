#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ceseplast/analysis.hpp"
#include "ceseplast/config.hpp"
#include "ceseplast/snapshot.hpp"

namespace ceseplast {

struct FrontSummary {
  double speed = 0.0;     // [m/s]
  int sign = 0;           // sign of dT11/dx
  double position = 0.0;  // at the last snapshot [m]
};

struct OracleDelta {
  std::string quantity;
  double measured = 0.0;
  double expected = 0.0;
  double relative_error() const;
};

/// Harmonic content of the particle velocity recorded at a fixed point.
struct ProbeSpectrum {
  double position = 0.0;  // [m]
  double t_begin = 0.0;   // start of the analysed window [s]
  std::size_t periods = 0;
  std::vector<double> harmonics;  // amplitudes of omega, 2 omega, ... [m/s]

  /// Third-harmonic amplitude over the fundamental.
  double distortion() const;
};

/// Analyse whole forcing periods of `samples` (spacing dt, first sample at
/// t0) starting one period after the elastic wave reaches the probe.
/// Returns nullopt when no whole period fits.
std::optional<ProbeSpectrum> probe_spectrum(const std::vector<double>& samples, double t0,
                                            double dt, double omega, double arrival,
                                            int harmonics = 5);

struct RunReport {
  ScenarioKind kind = ScenarioKind::Impact;
  std::size_t steps = 0;
  double wall_time = 0.0;  // [s]
  double cfl_max = 0.0;
  std::vector<FrontSummary> fronts;
  std::optional<PlateauStats> plateau;
  std::vector<OracleDelta> deltas;
  std::optional<ProbeSpectrum> probe;

  std::string to_json() const;
};

/// Measure fronts and plateaus in a finished run and compare them with the
/// closed-form predictions that apply to its scenario kind.
RunReport build_report(const ScenarioConfig& cfg, const std::vector<Snapshot>& snapshots,
                       std::size_t steps, double wall_time, double cfl_max);

/// Velocity history at a fixed point, one sample per level from t0.
struct ProbeRecord {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> v;
};

struct RunOutput {
  /// Where to write snapshots, `manifest`, `report.json` and `run.log`;
  /// nothing is written when empty.
  std::optional<std::filesystem::path> directory;
  std::ostream* log = nullptr;  // progress and reclassification lines
};

struct RunResult {
  MeshLevel final_level;
  std::vector<Snapshot> snapshots;
  RunReport report;
  RunManifest manifest;
  std::optional<ProbeRecord> probe;
};

/// Build the scenario, march it to t_end and collect snapshots every
/// output.snapshot_every_steps steps plus the initial and final levels.
/// Ultrasonic runs with a probe position also record the probe velocity every
/// level and report its spectrum.
/// Solver errors propagate after a manifest with the failure status has been
/// written.
RunResult run_scenario(const ScenarioConfig& cfg, const RunOutput& out = {});

}  // namespace ceseplast
