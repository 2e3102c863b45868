#pragma once

#include "ceseplast/material.hpp"
#include "ceseplast/node.hpp"

namespace ceseplast {

enum class BoundaryKind { NonReflective, FreeSurface, TractionForced, Periodic };

const char* to_string(BoundaryKind k) noexcept;

/// Treatment of one end of the bar. Only TractionForced uses the amplitude
/// and frequency: the prescribed axial stress is -amplitude * sin(omega t).
struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::NonReflective;
  double traction_amplitude = 0.0;  // F0 / A [Pa]
  double omega = 0.0;               // [rad/s]

  double boundary_traction(double t) const;
};

struct BoundaryPolicy {
  BoundaryCondition left;
  BoundaryCondition right;

  static BoundaryPolicy periodic() {
    return {{BoundaryKind::Periodic}, {BoundaryKind::Periodic}};
  }
};

/// Synthesize the ghost node mirrored across the boundary from the nearest
/// interior node of the same level.
///
///  - NonReflective: copy of the edge state with zero slope.
///  - FreeSurface: image node with T11 odd (S11 and p flip sign) and v even;
///    slopes are mirrored accordingly.
///  - TractionForced: ghost T11 = 2 T_bc(t) - T11_edge with S11 and v copied
///    from the edge, zero slope.
///
/// Periodic ends have no ghost; passing one throws std::invalid_argument.
NodeSolution apply_boundary(const BoundaryCondition& bc, const NodeSolution& edge,
                            double t, const MaterialProperties& mat);

}  // namespace ceseplast
