#pragma once

#include <cstddef>
#include <vector>

namespace ceseplast {

/// One segment of a piecewise-linear isotropic hardening curve. The segment
/// becomes active once the effective stress reaches `yield_stress`.
struct HardeningStage {
  double yield_stress;  // [Pa]
  double modulus;       // [Pa]

  bool operator==(const HardeningStage&) const = default;
};

/// Elastic and plastic constants of a metal plus the reference state of the
/// logarithmic equation of state p = k ln(rho/rho0) + p0.
///
/// Poisson's ratio is not stored; it is derived from E and mu so the triple
/// (k, mu, E) cannot drift out of sync. `validate()` rejects triples whose
/// implied bulk modulus differs from k by more than 2%.
struct MaterialProperties {
  double bulk_modulus;    // k [Pa]
  double shear_modulus;   // mu [Pa]
  double youngs_modulus;  // E [Pa]
  double rest_density;    // rho0 [kg/m^3]
  double initial_yield;   // sigma_y0 [Pa]
  std::vector<HardeningStage> hardening_stages;
  double reference_pressure = 0.0;  // p0 [Pa]

  /// Annealed copper: k = 140 GPa, rho0 = 8930, mu = 45 GPa, E = 122 GPa,
  /// sigma_y = 90 MPa, perfectly plastic.
  static MaterialProperties copper();

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  double poisson_ratio() const noexcept;
  std::size_t stage_count() const noexcept { return hardening_stages.size(); }

  bool operator==(const MaterialProperties&) const = default;
};

/// Default hardening modulus for a stage given only by its yield stress.
inline constexpr double kDefaultStageModulus = 1.0e10;

/// p = k ln(rho/rho0) + p0. Throws std::domain_error for rho <= 0.
double pressure_from_density(double rho, const MaterialProperties& mat);

/// Exact inverse of pressure_from_density.
double density_from_pressure(double p, const MaterialProperties& mat);

/// Uniaxial-strain longitudinal speed sqrt((k + 4 mu / 3) / rho0).
double elastic_wave_speed(const MaterialProperties& mat);

/// Perfectly plastic uniaxial-strain speed sqrt(k / rho0).
double plastic_wave_speed_perfect(const MaterialProperties& mat);

/// Characteristic speed with loading flag `beta` (0 or 1) and hardening
/// modulus `modulus`, evaluated at density `rho`.
double general_wave_speed(const MaterialProperties& mat, int beta,
                          double modulus, double rho);

/// As above at the rest density.
double general_wave_speed(const MaterialProperties& mat, int beta,
                          double modulus);

}  // namespace ceseplast
