#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "ceseplast/boundary.hpp"
#include "ceseplast/cese_kernel.hpp"
#include "ceseplast/constitutive.hpp"
#include "ceseplast/material.hpp"

namespace ceseplast {

/// Adapter exposing the 1-D elastic-plastic system to the CESE kernel.
class ElastoplasticPhysics {
 public:
  explicit ElastoplasticPhysics(const MaterialProperties& mat) : mat_(&mat) {}

  Vec3 flux(const Vec3& u) const { return ceseplast::flux(u, *mat_); }
  Mat3 jacobian(const Vec3& u) const { return ceseplast::jacobian(u, *mat_); }
  Vec3 source(const Vec3& u, const Vec3& ux, SourceSwitch sw) const;
  Mat3 source_jacobian(const Vec3& u, const Vec3& ux, SourceSwitch sw) const;

 private:
  const MaterialProperties* mat_;
};

enum class SourceMode {
  Direct,        // gamma-switched source inside the flux balance
  RadialReturn,  // elastic predictor followed by a return to the yield surface
};

const char* to_string(SourceMode m) noexcept;

struct SolverParams {
  static constexpr double epsilon = 0.5;

  double alpha = 1.0;  // re-weighting exponent; 0 disables re-weighting
  double newton_tol = 1e-10;
  int newton_max_iter = 25;
  SourceMode source_mode = SourceMode::RadialReturn;
  double cfl_limit = 1.0;

  void validate() const;

  bool operator==(const SolverParams&) const = default;
};

/// One time level of the staggered mesh.
///
/// The domain [origin, origin + cells * dx] is split into `cells` cells of
/// width dx. A level holds nodes at the centres of every other cell, starting
/// at cell `parity`; successive levels alternate parity and are `dt` apart.
/// Per-cell arrays persist across levels and belong to whichever node last
/// occupied the cell; a new node takes its plastic history from the cells of
/// its two parents.
struct MeshLevel {
  double origin = 0.0;
  double dx = 0.0;
  double dt = 0.0;
  double t = 0.0;
  int parity = 0;
  std::vector<NodeSolution> nodes;
  std::vector<PlasticState> plastic;   // per cell
  std::vector<SourceSwitch> switches;  // per cell, source switch used in marching
  std::vector<std::uint8_t> loading;   // per cell, 1 where the last update was plastic

  /// Uniform level at t = 0, parity 0, every node in `state` with zero slope.
  static MeshLevel uniform(std::size_t cells, double length, double dt,
                           const PrimitiveState& state, const MaterialProperties& mat);

  std::size_t cell_count() const noexcept { return plastic.size(); }
  std::size_t cell_of(std::size_t node) const noexcept { return parity + 2 * node; }
  double cell_center(std::size_t cell) const noexcept {
    return origin + (static_cast<double>(cell) + 0.5) * dx;
  }
  double position(std::size_t node) const noexcept { return cell_center(cell_of(node)); }
  double length() const noexcept { return dx * static_cast<double>(cell_count()); }

  static std::size_t node_count(std::size_t cells, int parity) noexcept {
    return (cells - static_cast<std::size_t>(parity) + 1) / 2;
  }

  /// Conserved state at x from the linear expansion of the nearest node.
  /// Positions outside the node span are clamped to it.
  ConservedState sample(double x) const;

  /// Throws std::invalid_argument when sizes or spacings are inconsistent.
  void validate() const;
};

/// CFL number max(|v| + c) dt / dx over the nodes of a level.
double level_cfl(const MeshLevel& level, const MaterialProperties& mat);

struct StepStats {
  double cfl = 0.0;
  int max_newton_iterations = 0;
  std::size_t plastic_nodes = 0;
  std::size_t reclassified = 0;  // direct mode: post-step class differs from the one used
};

/// Advance one level. Throws CflViolation before touching anything when the
/// level's CFL exceeds params.cfl_limit, NewtonFailure when a node does not
/// converge.
MeshLevel step(const MeshLevel& level, const BoundaryPolicy& bc, const SolverParams& params,
               const MaterialProperties& mat, StepStats* stats = nullptr);

struct RunOptions {
  /// Snapshot cadence in steps; 0 means only the initial level.
  std::size_t snapshot_every = 0;
  std::function<void(const MeshLevel&, std::size_t step)> on_snapshot;
  std::function<void(const MeshLevel&, std::size_t step, const StepStats&)> on_step;
  std::ostream* log = nullptr;
};

/// Number of levels needed to reach t_end from t0 with spacing dt.
std::size_t steps_to_reach(double t0, double t_end, double dt);

/// March until the first level with t >= t_end. Calls on_snapshot for the
/// initial level and every `snapshot_every` steps after it.
MeshLevel run(MeshLevel initial, double t_end, const BoundaryPolicy& bc,
              const SolverParams& params, const MaterialProperties& mat,
              const RunOptions& options = {});

}  // namespace ceseplast
