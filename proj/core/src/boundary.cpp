#include "ceseplast/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace ceseplast {

const char* to_string(BoundaryKind k) noexcept {
  switch (k) {
    case BoundaryKind::NonReflective:
      return "non_reflective";
    case BoundaryKind::FreeSurface:
      return "free_surface";
    case BoundaryKind::TractionForced:
      return "traction_forced";
    case BoundaryKind::Periodic:
      return "periodic";
  }
  return "?";
}

double BoundaryCondition::boundary_traction(double t) const {
  return -traction_amplitude * std::sin(omega * t);
}

namespace {

NodeSolution assemble(const PrimitiveState& s, double rho_x, double v_x, double s_x) {
  NodeSolution g;
  g.u = to_conserved(s);
  g.ux = Vec3(rho_x, rho_x * s.v + s.rho * v_x, rho_x * s.s11 + s.rho * s_x);
  return g;
}

}  // namespace

NodeSolution apply_boundary(const BoundaryCondition& bc, const NodeSolution& edge,
                            double t, const MaterialProperties& mat) {
  switch (bc.kind) {
    case BoundaryKind::NonReflective:
      return {edge.u, Vec3::Zero()};

    case BoundaryKind::FreeSurface: {
      const PrimitiveState e = to_primitive(edge.u);
      const double rho_x = edge.ux(0);
      const double v_x = velocity_gradient(edge.u, edge.ux);
      const double s_x = (edge.ux(2) - e.s11 * rho_x) / e.rho;
      const double p_e = pressure_from_density(e.rho, mat);
      const double p_x = mat.bulk_modulus * rho_x / e.rho;

      PrimitiveState g{density_from_pressure(-p_e, mat), e.v, -e.s11};
      // p and S11 are odd about the surface, so their slopes carry over;
      // v is even, so its slope flips.
      const double rho_gx = g.rho * p_x / mat.bulk_modulus;
      return assemble(g, rho_gx, -v_x, s_x);
    }

    case BoundaryKind::TractionForced: {
      const PrimitiveState e = to_primitive(edge.u);
      const double t_edge = axial_stress(e, mat);
      const double t_ghost = 2.0 * bc.boundary_traction(t) - t_edge;
      const double p_ghost = e.s11 - t_ghost;
      PrimitiveState g{density_from_pressure(p_ghost, mat), e.v, e.s11};
      return {to_conserved(g), Vec3::Zero()};
    }

    case BoundaryKind::Periodic:
      break;
  }
  throw std::invalid_argument("apply_boundary: no ghost node for this boundary kind");
}

}  // namespace ceseplast
