#pragma once

#include <cstddef>
#include <vector>

#include "ceseplast/snapshot.hpp"

namespace ceseplast {

/// Knobs for picking wave fronts out of a T11 profile.
///
/// A node is a front candidate where |dT11/dx| has a local maximum above both
/// `median_factor` times the profile's median gradient and `floor_fraction`
/// times its largest gradient. Candidates closer than `min_separation` nodes,
/// or whose separating valley stays above `valley_ratio` of the smaller peak,
/// are merged into the stronger one.
struct FrontDetectionParams {
  double median_factor = 5.0;
  double floor_fraction = 0.1;
  std::size_t min_separation = 3;
  double valley_ratio = 0.7;
  std::size_t min_track_length = 3;  // snapshots used for a speed fit
};

struct FrontLocation {
  double x = 0.0;         // [m], parabolic refinement of the peak
  double gradient = 0.0;  // signed dT11/dx at the peak [Pa/m]
};

std::vector<FrontLocation> locate_fronts(const Snapshot& snap,
                                         const FrontDetectionParams& params = {});

struct FrontTrack {
  std::vector<double> times;
  std::vector<double> positions;
  double speed = 0.0;  // least-squares dx/dt [m/s]
  int sign = 0;        // sign of dT11/dx at the front
  double final_position() const { return positions.back(); }
};

/// Follow fronts through a time-ordered snapshot series. Fronts of each
/// gradient sign are tracked separately: only the trailing run of snapshots
/// that all show the same number of fronts of that sign is used, and fronts
/// are matched by rank within that run. A sign whose run is shorter than
/// `min_track_length` contributes no tracks. Tracks come back sorted by
/// final position.
std::vector<FrontTrack> detect_fronts(const std::vector<Snapshot>& snaps,
                                      const FrontDetectionParams& params = {});

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
};

Moments moments(const std::vector<double>& values);

struct PlateauStats {
  double x_begin = 0.0;
  double x_end = 0.0;
  std::size_t count = 0;
  Moments rho;
  Moments v;
  Moments t11;
  Moments p;
};

/// Statistics over rows with x in [x_begin, x_end].
PlateauStats plateau_stats(const Snapshot& snap, double x_begin, double x_end);

/// Statistics over the middle `keep` fraction of the gap between two front
/// positions.
PlateauStats plateau_between(const Snapshot& snap, double front_a, double front_b,
                             double keep = 0.5);

/// Statistics over the `nodes` consecutive rows strictly between two front
/// positions whose T11 spread is smallest. Suited to short plateaus where the
/// tails of both fronts reach the middle.
PlateauStats flattest_window(const Snapshot& snap, double front_a, double front_b,
                             std::size_t nodes = 3);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope x + intercept (needs two distinct x).
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Amplitude of the `harmonic`-th multiple of omega in a uniformly sampled
/// record, by projection onto cos/sin. The record should span whole periods.
double harmonic_amplitude(const std::vector<double>& samples, double sample_dt, double t0,
                          double omega, int harmonic);

/// Discrete L2 norm of a - b with weight dx.
double l2_difference(const std::vector<double>& a, const std::vector<double>& b, double dx);

/// log(e_coarse / e_fine) / log(refinement).
double observed_order(double e_coarse, double e_fine, double refinement = 2.0);

}  // namespace ceseplast
