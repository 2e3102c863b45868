#pragma once

#include <array>
#include <span>

#include <Eigen/Core>

#include "ceseplast/material.hpp"

namespace ceseplast {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Density, particle velocity and axial deviatoric stress at a point.
struct PrimitiveState {
  double rho;  // [kg/m^3]
  double v;    // [m/s]
  double s11;  // [Pa]
};

/// Conserved triple (rho, rho v, rho S11).
using ConservedState = Vec3;

/// Switch state of the plastic source: gamma in {0, 1} and the active
/// hardening modulus.
struct SourceSwitch {
  int gamma = 0;
  double modulus = 0.0;
};

ConservedState to_conserved(const PrimitiveState& s);

/// Throws DegenerateStateError when u1 <= 0 or any component is not finite.
PrimitiveState to_primitive(const ConservedState& u);

/// Axial Cauchy stress T11 = -p + S11 (tension positive).
double axial_stress(const PrimitiveState& s, const MaterialProperties& mat);

/// E = (rho v, rho v^2 + p - S11, rho S11 v).
Vec3 flux(const ConservedState& u, const MaterialProperties& mat);

/// H = (0, 0, (4/3) mu rho (1 - gamma/(1 + B/3mu)) dv/dx).
Vec3 source(const ConservedState& u, double dv_dx, const MaterialProperties& mat,
            int gamma, double modulus);

/// dE/dU in conserved variables.
Mat3 jacobian(const ConservedState& u, const MaterialProperties& mat);

/// Characteristic speeds (v - c, v, v + c), ascending.
std::array<double, 3> eigenvalues(const PrimitiveState& s, const MaterialProperties& mat,
                                  int beta, double modulus);

/// max over cells of |v| + c. The three spans must have equal, non-zero
/// length; throws std::invalid_argument otherwise.
double max_signal_speed(std::span<const PrimitiveState> states,
                        const MaterialProperties& mat, std::span<const int> beta,
                        std::span<const double> modulus);

/// Velocity gradient recovered from a conserved state and its x-derivative.
double velocity_gradient(const ConservedState& u, const Vec3& ux);

}  // namespace ceseplast
