#pragma once

// Single-node CESE update on a 1-D staggered space-time mesh.
//
// A node at (x_j, t) is advanced from its two parents at (x_j -/+ dx, t - dt)
// on the previous level. `dx` is the distance between a node and either
// parent and `dt` the time between levels, so nodes of one level sit 2 dx
// apart and the CFL number is |lambda| dt / dx.
//
// Inside each solution element the unknowns are linear in x and t, with the
// time derivative fixed by the PDE (u_t = -f_x + s). The flux balance over
// the conservation element gives
//
//   u_j - dt/2 s_j = 1/2 [u_l + u_r + dt/2 (s_l + s_r) + P_l - P_r],
//   P = dx/2 u_x + dt/dx f + dt^2/(2 dx) f_t,
//
// which is solved with Newton's method when s_j depends on u_j. The new
// slope comes from the a-epsilon update with epsilon = 1/2, optionally
// re-weighted to damp oscillations at discontinuities.

#include <algorithm>
#include <cmath>
#include <concepts>

#include <Eigen/LU>

#include "ceseplast/node.hpp"
#include "ceseplast/system.hpp"

namespace ceseplast {

template <class P>
concept CesePhysics = requires(const P& p, const Vec3& u, const Vec3& ux, SourceSwitch sw) {
  { p.flux(u) } -> std::convertible_to<Vec3>;
  { p.jacobian(u) } -> std::convertible_to<Mat3>;
  { p.source(u, ux, sw) } -> std::convertible_to<Vec3>;
  { p.source_jacobian(u, ux, sw) } -> std::convertible_to<Mat3>;
};

struct StepGeometry {
  double dx;  // node-to-parent distance [m]
  double dt;  // time between levels [s]
};

struct ParentNode {
  NodeSolution node;
  SourceSwitch sw;
};

/// f, f_x, s, u_t, f_t of one solution element.
struct DerivedQuantities {
  Vec3 f;
  Vec3 fx;
  Vec3 s;
  Vec3 ut;
  Vec3 ft;
};

template <CesePhysics P>
DerivedQuantities node_derived_quantities(const P& phys, const NodeSolution& n,
                                          SourceSwitch sw) {
  const Mat3 a = phys.jacobian(n.u);
  DerivedQuantities d;
  d.f = phys.flux(n.u);
  d.fx = a * n.ux;
  d.s = phys.source(n.u, n.ux, sw);
  d.ut = -d.fx + d.s;
  d.ft = a * d.ut;
  return d;
}

/// Everything about a new node that follows from its parents alone.
struct MarchPrediction {
  Vec3 explicit_part;   // right-hand side of the flux balance
  Vec3 left_advanced;   // left parent's SE evaluated at the new time
  Vec3 right_advanced;  // right parent's SE evaluated at the new time
  Vec3 central_slope;   // (right_advanced - left_advanced) / (2 dx)
};

template <CesePhysics P>
MarchPrediction predict(const P& phys, const ParentNode& left, const ParentNode& right,
                        const StepGeometry& g) {
  const DerivedQuantities dl = node_derived_quantities(phys, left.node, left.sw);
  const DerivedQuantities dr = node_derived_quantities(phys, right.node, right.sw);
  const double h = g.dx;
  const double tau = g.dt;
  auto face_term = [&](const NodeSolution& n, const DerivedQuantities& d) -> Vec3 {
    return 0.5 * h * n.ux + (tau / h) * d.f + (tau * tau / (2.0 * h)) * d.ft;
  };

  MarchPrediction out;
  out.explicit_part = 0.5 * (left.node.u + right.node.u + 0.5 * tau * (dl.s + dr.s) +
                             face_term(left.node, dl) - face_term(right.node, dr));
  out.left_advanced = left.node.u + tau * dl.ut;
  out.right_advanced = right.node.u + tau * dr.ut;
  out.central_slope = (out.right_advanced - out.left_advanced) / (2.0 * h);
  return out;
}

struct NewtonResult {
  Vec3 u;
  int iterations = 0;
  double residual = 0.0;  // max_m |G_m| / (|u_m| + |rhs_m|)
  bool converged = false;
};

/// Solve u - dt/2 s(u, u_x) = rhs for u with u_x frozen at `slope`.
template <CesePhysics P>
NewtonResult solve_flux_balance(const P& phys, const Vec3& rhs, const Vec3& slope,
                                SourceSwitch sw, double dt, double tol, int max_iter) {
  auto scaled_residual = [&](const Vec3& u, const Vec3& g) {
    double worst = 0.0;
    for (int m = 0; m < 3; ++m) {
      if (g(m) == 0.0) continue;
      const double scale = std::abs(u(m)) + std::abs(rhs(m));
      worst = std::max(worst, scale > 0.0 ? std::abs(g(m)) / scale : INFINITY);
    }
    return worst;
  };

  NewtonResult r;
  r.u = rhs;
  const double half = 0.5 * dt;
  for (;;) {
    const Vec3 g = r.u - half * phys.source(r.u, slope, sw) - rhs;
    r.residual = scaled_residual(r.u, g);
    if (r.residual <= tol) {
      r.converged = true;
      return r;
    }
    if (r.iterations >= max_iter) return r;
    const Mat3 jac = Mat3::Identity() - half * phys.source_jacobian(r.u, slope, sw);
    r.u -= jac.partialPivLu().solve(g);
    ++r.iterations;
  }
}

/// W(x-, x+, alpha) = (|x+|^a x- + |x-|^a x+) / (|x+|^a + |x-|^a).
/// alpha = 0 is the arithmetic mean; both inputs zero give 0.
inline double reweight(double x_minus, double x_plus, double alpha) {
  if (alpha == 0.0) return 0.5 * (x_minus + x_plus);
  const double wp = alpha == 1.0 ? std::abs(x_plus) : std::pow(std::abs(x_plus), alpha);
  const double wm = alpha == 1.0 ? std::abs(x_minus) : std::pow(std::abs(x_minus), alpha);
  const double denom = wp + wm;
  if (denom == 0.0) return 0.0;
  return (wp * x_minus + wm * x_plus) / denom;
}

/// a-epsilon slope at the new node from the one-sided differences
/// (u_new - left_advanced)/dx and (right_advanced - u_new)/dx.
inline Vec3 slope_update(const MarchPrediction& pred, const Vec3& u_new, double alpha,
                         const StepGeometry& g) {
  const Vec3 minus = (u_new - pred.left_advanced) / g.dx;
  const Vec3 plus = (pred.right_advanced - u_new) / g.dx;
  Vec3 out;
  for (int m = 0; m < 3; ++m) out(m) = reweight(minus(m), plus(m), alpha);
  return out;
}

struct MarchOutcome {
  NodeSolution node;
  NewtonResult newton;
};

/// Full update of one node with a fixed source switch.
template <CesePhysics P>
MarchOutcome march_node(const P& phys, const ParentNode& left, const ParentNode& right,
                        SourceSwitch sw, const StepGeometry& g, double alpha,
                        double newton_tol, int newton_max_iter) {
  const MarchPrediction pred = predict(phys, left, right, g);
  MarchOutcome out;
  out.newton = solve_flux_balance(phys, pred.explicit_part, pred.central_slope, sw, g.dt,
                                  newton_tol, newton_max_iter);
  out.node.u = out.newton.u;
  out.node.ux = slope_update(pred, out.node.u, alpha, g);
  return out;
}

}  // namespace ceseplast
