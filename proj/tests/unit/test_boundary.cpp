#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ceseplast/boundary.hpp"
#include "ceseplast/cese.hpp"
#include "ceseplast/scenario.hpp"
#include "copper.hpp"

using namespace ceseplast;
using testing_support::uniform;

namespace {

const MaterialProperties cu = MaterialProperties::copper();

double t11_of(const NodeSolution& n) { return axial_stress(to_primitive(n.u), cu); }

// Gaussian velocity pulse of amplitude a travelling in direction `dir`
// (+1 right, -1 left), compressive either way.
MeshLevel pulse(int dir, double center, double a, std::size_t cells, double cfl) {
  const double c = copper::elastic_speed();
  const double width = 0.05;
  const double dx = 1.0 / static_cast<double>(cells);
  MeshLevel lvl = MeshLevel::uniform(cells, 1.0, cfl * dx / c, {copper::rho0, 0.0, 0.0}, cu);
  for (std::size_t k = 0; k < lvl.nodes.size(); ++k) {
    const double d = lvl.position(k) - center;
    const double g = a * std::exp(-d * d / (width * width));
    const double gx = -2.0 * d / (width * width) * g;
    const double rho = copper::rho0 * (1.0 + g / c);
    const double s = -4.0 / 3.0 * copper::mu * g / c;
    const double v = dir * g;
    const double rho_x = copper::rho0 * gx / c;
    const double s_x = -4.0 / 3.0 * copper::mu * gx / c;
    lvl.nodes[k].u = to_conserved({rho, v, s});
    lvl.nodes[k].ux = Vec3(rho_x, rho_x * v + rho * dir * gx, rho_x * s + rho * s_x);
  }
  return lvl;
}

}  // namespace

TEST(BoundaryTraction, Sinusoid) {
  const BoundaryCondition bc{BoundaryKind::TractionForced, 2e8, 1e5};
  EXPECT_EQ(bc.boundary_traction(0.0), 0.0);
  EXPECT_NEAR(bc.boundary_traction(std::numbers::pi / 2e5), -2e8, 1e-6);
  EXPECT_NEAR(bc.boundary_traction(3 * std::numbers::pi / 2e5), 2e8, 1e-6);
}

TEST(ApplyBoundary, NonReflectiveCopiesStateWithZeroSlope) {
  const NodeSolution edge{to_conserved({8950.0, 3.0, -2e7}), Vec3(1.0, 2.0, 3.0)};
  const NodeSolution g = apply_boundary({BoundaryKind::NonReflective}, edge, 0.0, cu);
  EXPECT_EQ(g.u, edge.u);
  EXPECT_EQ(g.ux, Vec3::Zero());
}

TEST(ApplyBoundary, FreeSurfaceFlipsDeviatoricStress) {
  const NodeSolution edge{to_conserved({copper::rho0, 2.0, -1e8}), Vec3::Zero()};
  const NodeSolution g = apply_boundary({BoundaryKind::FreeSurface}, edge, 0.0, cu);
  EXPECT_NEAR(t11_of(edge), -1e8, 1e-6);
  EXPECT_NEAR(t11_of(g), 1e8, 1e-6);
  EXPECT_NEAR(to_primitive(g.u).v, 2.0, 1e-15);
}

TEST(ApplyBoundary, FreeSurfaceMirrorsPressure) {
  const double rho = copper::rho0 * std::exp(1e-3);
  const NodeSolution edge{to_conserved({rho, -5.0, 3e7}), Vec3::Zero()};
  const NodeSolution g = apply_boundary({BoundaryKind::FreeSurface}, edge, 0.0, cu);
  const PrimitiveState s = to_primitive(g.u);
  EXPECT_NEAR(pressure_from_density(s.rho, cu), -1.4e8, 1e-3);
  EXPECT_NEAR(s.s11, -3e7, 1e-8);
  EXPECT_NEAR(t11_of(g) + t11_of(edge), 0.0, 1e-4);
}

TEST(ApplyBoundaryProperty, FreeSurfaceAverageTractionVanishes) {
  for (int i = 0; i < 100; ++i) {
    const PrimitiveState e{copper::rho0 * uniform(0.98, 1.02), uniform(-50, 50), uniform(-6e7, 6e7)};
    const NodeSolution edge{to_conserved(e), Vec3(uniform(-1, 1), uniform(-1e4, 1e4), uniform(-1e9, 1e9))};
    const NodeSolution g = apply_boundary({BoundaryKind::FreeSurface}, edge, 0.0, cu);
    EXPECT_NEAR(t11_of(g) + t11_of(edge), 0.0, 1e-6 * std::abs(t11_of(edge)) + 1e-3);
    EXPECT_NEAR(to_primitive(g.u).v, e.v, 1e-12 * std::abs(e.v) + 1e-12);
  }
}

TEST(ApplyBoundaryProperty, TractionGhostAveragesToPrescribedValue) {
  for (int i = 0; i < 100; ++i) {
    const BoundaryCondition bc{BoundaryKind::TractionForced, uniform(1e6, 2e8), uniform(1e4, 1e6)};
    const double t = uniform(0.0, 1e-3);
    const PrimitiveState e{copper::rho0 * uniform(0.99, 1.01), uniform(-20, 20), uniform(-6e7, 6e7)};
    const NodeSolution edge{to_conserved(e), Vec3::Zero()};
    const NodeSolution g = apply_boundary(bc, edge, t, cu);
    const double mean = 0.5 * (t11_of(g) + t11_of(edge));
    EXPECT_NEAR(mean, bc.boundary_traction(t), 1e-6 * bc.traction_amplitude);
    EXPECT_NEAR(to_primitive(g.u).s11, e.s11, 1e-8 * std::abs(e.s11) + 1e-8);
    EXPECT_NEAR(to_primitive(g.u).v, e.v, 1e-12);
  }
}

TEST(ApplyBoundary, PeriodicHasNoGhost) {
  const NodeSolution edge{to_conserved({copper::rho0, 0.0, 0.0}), Vec3::Zero()};
  EXPECT_THROW(apply_boundary({BoundaryKind::Periodic}, edge, 0.0, cu), std::invalid_argument);
}

TEST(BoundaryNames, Stable) {
  EXPECT_STREQ(to_string(BoundaryKind::NonReflective), "non_reflective");
  EXPECT_STREQ(to_string(BoundaryKind::FreeSurface), "free_surface");
  EXPECT_STREQ(to_string(BoundaryKind::TractionForced), "traction_forced");
  EXPECT_STREQ(to_string(BoundaryKind::Periodic), "periodic");
}

TEST(BoundaryBehaviour, NonReflectiveEndLetsPulseLeave) {
  const double a = 0.01;
  const BoundaryPolicy bc{{BoundaryKind::NonReflective}, {BoundaryKind::NonReflective}};
  for (double alpha : {0.0, 1.0}) {
    SolverParams p;
    p.alpha = alpha;
    const MeshLevel out = run(pulse(1, 0.7, a, 400, 0.6), 0.9 / copper::elastic_speed(), bc, p, cu);
    double residual = 0.0;
    for (const auto& n : out.nodes) residual = std::max(residual, std::abs(to_primitive(n.u).v));
    EXPECT_LE(residual, 0.02 * a) << "alpha " << alpha;
  }
}

TEST(BoundaryBehaviour, FreeSurfaceReflectsCompressionAsTension) {
  const double a = 0.01;
  const double incident = copper::rho0 * copper::elastic_speed() * a;
  const BoundaryPolicy bc{{BoundaryKind::FreeSurface}, {BoundaryKind::NonReflective}};
  const MeshLevel out = run(pulse(-1, 0.4, a, 400, 0.6), 0.7 / copper::elastic_speed(), bc, {}, cu);
  double tmax = 0.0;
  for (const auto& n : out.nodes) tmax = std::max(tmax, t11_of(n));
  EXPECT_NEAR(tmax / incident, 1.0, 0.03);
}

TEST(BoundaryBehaviour, ForcedEndFollowsPrescribedTraction) {
  ScenarioConfig cfg = find_builtin("ultrasonic_subyield").config;
  cfg.time.t_end = 3e-4;
  const ceseplast::Setup setup = build_setup(cfg);
  const double f0 = cfg.scenario.force_amplitude;
  const double w = cfg.scenario.omega;
  double worst = 0.0;
  RunOptions o;
  // The node in cell 0 sits half a cell inside the wall on even levels.
  o.on_step = [&](const MeshLevel& l, std::size_t, const StepStats&) {
    if (l.parity != 0) return;
    worst = std::max(worst, std::abs(axial_stress(to_primitive(l.nodes[0].u), cfg.material) +
                                     f0 * std::sin(w * l.t)));
  };
  run(setup.initial, cfg.time.t_end, setup.bc, cfg.solver_params(), cfg.material, o);
  EXPECT_LE(worst, 0.05 * f0);
}
