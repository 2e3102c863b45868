#include "ceseplast/cese.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ceseplast/errors.hpp"

namespace ceseplast {

CflViolation::CflViolation(double cfl, double limit)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "CFL number " << cfl << " exceeds limit " << limit;
        return os.str();
      }()),
      cfl_(cfl),
      limit_(limit) {}

Vec3 ElastoplasticPhysics::source(const Vec3& u, const Vec3& ux, SourceSwitch sw) const {
  return ceseplast::source(u, velocity_gradient(u, ux), *mat_, sw.gamma, sw.modulus);
}

Mat3 ElastoplasticPhysics::source_jacobian(const Vec3& u, const Vec3& ux,
                                           SourceSwitch sw) const {
  // s3 = C (ux2 - u2 ux1 / u1) with the slope held fixed.
  const double c = plastic_source_coefficient(sw.gamma, *mat_, sw.modulus);
  Mat3 j = Mat3::Zero();
  j(2, 0) = c * u(1) * ux(0) / (u(0) * u(0));
  j(2, 1) = -c * ux(0) / u(0);
  return j;
}

const char* to_string(SourceMode m) noexcept {
  return m == SourceMode::Direct ? "direct" : "radial_return";
}

void SolverParams::validate() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("solver: alpha must be >= 0");
  if (!(newton_tol > 0.0)) throw std::invalid_argument("solver: newton_tol must be > 0");
  if (newton_max_iter < 1) throw std::invalid_argument("solver: newton_max_iter must be >= 1");
  if (!(cfl_limit > 0.0 && cfl_limit <= 1.0)) {
    throw std::invalid_argument("solver: cfl_limit must lie in (0, 1]");
  }
}

MeshLevel MeshLevel::uniform(std::size_t cells, double length, double dt,
                             const PrimitiveState& state, const MaterialProperties& mat) {
  MeshLevel level;
  level.dx = length / static_cast<double>(cells);
  level.dt = dt;
  level.nodes.assign(node_count(cells, 0), NodeSolution{to_conserved(state), Vec3::Zero()});
  level.plastic.assign(cells, PlasticState::initial(mat));
  level.switches.assign(cells, SourceSwitch{0, mat.hardening_stages.front().modulus});
  level.loading.assign(cells, 0);
  return level;
}

void MeshLevel::validate() const {
  const std::size_t cells = cell_count();
  if (!(dx > 0.0)) throw std::invalid_argument("mesh: dx must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("mesh: dt must be positive");
  if (parity != 0 && parity != 1) throw std::invalid_argument("mesh: parity must be 0 or 1");
  if (switches.size() != cells || loading.size() != cells) {
    throw std::invalid_argument("mesh: per-cell arrays differ in length");
  }
  if (nodes.size() != node_count(cells, parity) || nodes.size() < 3) {
    throw std::invalid_argument("mesh: node count does not match cells/parity (need >= 3)");
  }
}

ConservedState MeshLevel::sample(double x) const {
  const double first = position(0);
  const double last = position(nodes.size() - 1);
  const double xc = std::clamp(x, first, last);
  const auto k = static_cast<std::size_t>(std::lround((xc - first) / (2.0 * dx)));
  const std::size_t node = std::min(k, nodes.size() - 1);
  return nodes[node].u + (xc - position(node)) * nodes[node].ux;
}

double level_cfl(const MeshLevel& level, const MaterialProperties& mat) {
  double fastest = 0.0;
  for (std::size_t k = 0; k < level.nodes.size(); ++k) {
    const PrimitiveState s = to_primitive(level.nodes[k].u);
    const SourceSwitch sw = level.switches[level.cell_of(k)];
    fastest = std::max(fastest, std::abs(s.v) + general_wave_speed(mat, sw.gamma, sw.modulus, s.rho));
  }
  return fastest * level.dt / level.dx;
}

namespace {

double stress_of(const Vec3& u) { return u(2) / u(0); }

}  // namespace

MeshLevel step(const MeshLevel& level, const BoundaryPolicy& bc, const SolverParams& params,
               const MaterialProperties& mat, StepStats* stats) {
  const std::size_t cells = level.cell_count();
  const bool periodic = bc.left.kind == BoundaryKind::Periodic;
  if (periodic != (bc.right.kind == BoundaryKind::Periodic)) {
    throw std::invalid_argument("step: periodic boundaries must be used on both ends");
  }
  if (periodic && cells % 2 != 0) {
    throw std::invalid_argument("step: periodic boundaries need an even cell count");
  }

  StepStats local;
  local.cfl = level_cfl(level, mat);
  if (local.cfl > params.cfl_limit * (1.0 + 1e-12)) {
    throw CflViolation(local.cfl, params.cfl_limit);
  }

  const ElastoplasticPhysics phys(mat);
  const StepGeometry geom{level.dx, level.dt};
  const double t_ghost = level.t + 0.5 * level.dt;
  const auto ncells = static_cast<long>(cells);

  auto node_in_cell = [&](long cell) -> const NodeSolution& {
    return level.nodes[static_cast<std::size_t>(cell - level.parity) / 2];
  };
  auto parent_at = [&](long cell) -> ParentNode {
    if (cell >= 0 && cell < ncells) {
      return {node_in_cell(cell), level.switches[static_cast<std::size_t>(cell)]};
    }
    if (periodic) {
      const long wrapped = (cell + ncells) % ncells;
      return {node_in_cell(wrapped), level.switches[static_cast<std::size_t>(wrapped)]};
    }
    const bool left_end = cell < 0;
    const long edge = left_end ? cell + 2 : cell - 2;
    const BoundaryCondition& side = left_end ? bc.left : bc.right;
    return {apply_boundary(side, node_in_cell(edge), t_ghost, mat),
            level.switches[static_cast<std::size_t>(edge)]};
  };

  auto history_at = [&](long cell) -> PlasticState {
    auto at = [&](long c) -> const PlasticState* {
      if (c >= 0 && c < ncells) return &level.plastic[static_cast<std::size_t>(c)];
      if (periodic) return &level.plastic[static_cast<std::size_t>((c + ncells) % ncells)];
      return nullptr;
    };
    const PlasticState* l = at(cell - 1);
    const PlasticState* r = at(cell + 1);
    if (!l) return *r;
    if (!r) return *l;
    return blend_history(*l, *r, mat);
  };

  MeshLevel next;
  next.origin = level.origin;
  next.dx = level.dx;
  next.dt = level.dt;
  next.t = level.t + level.dt;
  next.parity = 1 - level.parity;
  next.plastic = level.plastic;
  next.switches = level.switches;
  next.loading = level.loading;
  next.nodes.resize(MeshLevel::node_count(cells, next.parity));

  const double two_mu = 2.0 * mat.shear_modulus;
  const double elastic_coeff = plastic_source_coefficient(0, mat, 0.0);

  for (std::size_t k = 0; k < next.nodes.size(); ++k) {
    const std::size_t c = next.cell_of(k);
    const long cell = static_cast<long>(c);
    const ParentNode left = parent_at(cell - 1);
    const ParentNode right = parent_at(cell + 1);
    const MarchPrediction pred = predict(phys, left, right, geom);
    // The cell's own record is two levels old; the parents' cells carry the
    // history that matches the parent stresses.
    PlasticState& plastic = next.plastic[c];
    plastic = history_at(cell);

    SourceSwitch sw{0, hardening_lookup(plastic, mat).modulus};
    double trend = 0.0;
    if (params.source_mode == SourceMode::Direct) {
      // Classify against the parent-level stress interpolated to this cell and
      // the elastic trend of the velocity gradient.
      const Vec3 u_here = 0.5 * (left.node.u + level.dx * left.node.ux + right.node.u -
                                 level.dx * right.node.ux);
      const Vec3 u_mid = 0.5 * (pred.left_advanced + pred.right_advanced);
      trend = velocity_gradient(u_mid, pred.central_slope);
      sw.gamma = gamma_of(classify_loading(stress_of(u_here), trend, plastic));
    }

    const NewtonResult newton = solve_flux_balance(phys, pred.explicit_part, pred.central_slope,
                                                   sw, level.dt, params.newton_tol,
                                                   params.newton_max_iter);
    if (!newton.converged) {
      std::ostringstream os;
      os << "Newton failed at x = " << next.cell_center(c) << " m, t = " << next.t
         << " s after " << newton.iterations << " iterations (scaled residual "
         << newton.residual << ")";
      throw NewtonFailure(os.str());
    }
    local.max_newton_iterations = std::max(local.max_newton_iterations, newton.iterations);

    Vec3 u = newton.u;
    std::uint8_t plastic_flag = 0;
    if (params.source_mode == SourceMode::RadialReturn) {
      const ReturnMapping rm = radial_return(stress_of(u), plastic, mat);
      if (rm.yielded) {
        u(2) = u(0) * rm.stress;
        plastic = rm.state;
        plastic_flag = 1;
      }
    } else if (sw.gamma == 1) {
      const double trial_increment = std::abs(elastic_coeff * trend * level.dt);
      const double plastic_fraction = 1.0 / (1.0 + sw.modulus / (3.0 * mat.shear_modulus));
      plastic.eff_plastic_strain +=
          trial_increment * plastic_fraction / two_mu;
      plastic.yield_radius += trial_increment * (1.0 - plastic_fraction);
      plastic.stage = std::max(
          plastic.stage, stage_for_effective_stress(effective_stress(plastic.yield_radius), mat));
      plastic_flag = 1;
    }

    NodeSolution& out = next.nodes[k];
    out.u = u;
    out.ux = slope_update(pred, u, params.alpha, geom);
    next.switches[c] = sw;
    next.loading[c] = plastic_flag;
    local.plastic_nodes += plastic_flag;

    if (params.source_mode == SourceMode::Direct) {
      const double vx_new = velocity_gradient(out.u, out.ux);
      const int post = gamma_of(classify_loading(stress_of(out.u), vx_new, plastic));
      if (post != sw.gamma) ++local.reclassified;
    }
  }

  if (stats) *stats = local;
  return next;
}

std::size_t steps_to_reach(double t0, double t_end, double dt) {
  if (t_end < t0) throw std::invalid_argument("run: t_end precedes the initial time");
  const double span = (t_end - t0) / dt;
  return static_cast<std::size_t>(std::ceil(span - 1e-9));
}

MeshLevel run(MeshLevel initial, double t_end, const BoundaryPolicy& bc,
              const SolverParams& params, const MaterialProperties& mat,
              const RunOptions& options) {
  params.validate();
  initial.validate();
  const std::size_t steps = steps_to_reach(initial.t, t_end, initial.dt);
  const double t0 = initial.t;

  if (options.on_snapshot) options.on_snapshot(initial, 0);
  MeshLevel level = std::move(initial);
  for (std::size_t n = 1; n <= steps; ++n) {
    StepStats stats;
    level = step(level, bc, params, mat, &stats);
    // Avoid drift from repeated addition.
    level.t = t0 + static_cast<double>(n) * level.dt;
    if (options.log && stats.reclassified > 0) {
      *options.log << "step " << n << " t=" << level.t << ": " << stats.reclassified
                   << " node(s) changed loading class after the update\n";
    }
    if (options.on_step) options.on_step(level, n, stats);
    if (options.on_snapshot && options.snapshot_every > 0 && n % options.snapshot_every == 0) {
      options.on_snapshot(level, n);
    }
  }
  return level;
}

}  // namespace ceseplast
