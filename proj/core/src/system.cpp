#include "ceseplast/system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ceseplast/errors.hpp"

namespace ceseplast {

namespace {

void require_physical(const ConservedState& u) {
  if (!(u(0) > 0.0) || !u.allFinite()) {
    throw DegenerateStateError("degenerate conserved state: density must be positive and finite");
  }
}

}  // namespace

ConservedState to_conserved(const PrimitiveState& s) {
  return {s.rho, s.rho * s.v, s.rho * s.s11};
}

PrimitiveState to_primitive(const ConservedState& u) {
  require_physical(u);
  return {u(0), u(1) / u(0), u(2) / u(0)};
}

double axial_stress(const PrimitiveState& s, const MaterialProperties& mat) {
  return -pressure_from_density(s.rho, mat) + s.s11;
}

Vec3 flux(const ConservedState& u, const MaterialProperties& mat) {
  const PrimitiveState s = to_primitive(u);
  const double p = pressure_from_density(s.rho, mat);
  return {u(1), u(1) * s.v + p - s.s11, u(2) * s.v};
}

Vec3 source(const ConservedState& u, double dv_dx, const MaterialProperties& mat,
            int gamma, double modulus) {
  const double mu = mat.shear_modulus;
  const double coeff =
      4.0 / 3.0 * mu * (1.0 - static_cast<double>(gamma) / (1.0 + modulus / (3.0 * mu)));
  return {0.0, 0.0, coeff * u(0) * dv_dx};
}

Mat3 jacobian(const ConservedState& u, const MaterialProperties& mat) {
  const PrimitiveState s = to_primitive(u);
  const double k = mat.bulk_modulus;
  Mat3 a;
  // clang-format off
  a << 0.0,                                   1.0,   0.0,
       -s.v * s.v + k / s.rho + s.s11 / s.rho, 2 * s.v, -1.0 / s.rho,
       -s.v * s.s11,                          s.s11, s.v;
  // clang-format on
  return a;
}

std::array<double, 3> eigenvalues(const PrimitiveState& s, const MaterialProperties& mat,
                                  int beta, double modulus) {
  const double c = general_wave_speed(mat, beta, modulus, s.rho);
  return {s.v - c, s.v, s.v + c};
}

double max_signal_speed(std::span<const PrimitiveState> states,
                        const MaterialProperties& mat, std::span<const int> beta,
                        std::span<const double> modulus) {
  if (states.empty()) throw std::invalid_argument("max_signal_speed: empty state set");
  if (beta.size() != states.size() || modulus.size() != states.size()) {
    throw std::invalid_argument("max_signal_speed: mismatched span lengths");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double c = general_wave_speed(mat, beta[i], modulus[i], states[i].rho);
    best = std::max(best, std::abs(states[i].v) + c);
  }
  return best;
}

double velocity_gradient(const ConservedState& u, const Vec3& ux) {
  return (ux(1) - u(1) / u(0) * ux(0)) / u(0);
}

}  // namespace ceseplast
