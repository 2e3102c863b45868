#include "ceseplast/material.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ceseplast {

MaterialProperties MaterialProperties::copper() {
  MaterialProperties m{};
  m.bulk_modulus = 140.0e9;
  m.shear_modulus = 45.0e9;
  m.youngs_modulus = 122.0e9;
  m.rest_density = 8930.0;
  m.initial_yield = 90.0e6;
  m.hardening_stages = {{90.0e6, 0.0}};
  m.reference_pressure = 0.0;
  return m;
}

double MaterialProperties::poisson_ratio() const noexcept {
  return youngs_modulus / (2.0 * shear_modulus) - 1.0;
}

void MaterialProperties::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("material: ") + what);
  };
  require(std::isfinite(bulk_modulus) && bulk_modulus > 0.0,
          "bulk modulus k must be positive");
  require(std::isfinite(shear_modulus) && shear_modulus > 0.0,
          "shear modulus mu must be positive");
  require(std::isfinite(youngs_modulus) && youngs_modulus > 0.0,
          "Young's modulus E must be positive");
  require(std::isfinite(rest_density) && rest_density > 0.0,
          "rest density rho0 must be positive");
  require(std::isfinite(initial_yield) && initial_yield > 0.0,
          "initial yield stress must be positive");
  require(std::isfinite(reference_pressure), "reference pressure must be finite");
  require(!hardening_stages.empty(), "at least one hardening stage is required");
  require(hardening_stages.front().yield_stress == initial_yield,
          "first hardening stage must start at the initial yield stress");
  for (std::size_t i = 0; i < hardening_stages.size(); ++i) {
    const auto& s = hardening_stages[i];
    require(std::isfinite(s.modulus) && s.modulus >= 0.0,
            "hardening moduli must be non-negative");
    if (i > 0) {
      require(s.yield_stress > hardening_stages[i - 1].yield_stress,
              "hardening stages must be strictly ascending in yield stress");
    }
  }
  const double nu = poisson_ratio();
  require(nu > -1.0 && nu < 0.5, "E and mu imply a Poisson ratio outside (-1, 0.5)");
  const double k_implied = youngs_modulus / (3.0 * (1.0 - 2.0 * nu));
  require(std::abs(bulk_modulus - k_implied) / bulk_modulus <= 0.02,
          "k, mu and E are inconsistent by more than 2%");
}

double pressure_from_density(double rho, const MaterialProperties& mat) {
  if (!(rho > 0.0)) {
    throw std::domain_error("pressure_from_density: density must be positive");
  }
  return mat.bulk_modulus * std::log(rho / mat.rest_density) + mat.reference_pressure;
}

double density_from_pressure(double p, const MaterialProperties& mat) {
  return mat.rest_density * std::exp((p - mat.reference_pressure) / mat.bulk_modulus);
}

double elastic_wave_speed(const MaterialProperties& mat) {
  return std::sqrt((mat.bulk_modulus + 4.0 * mat.shear_modulus / 3.0) /
                   mat.rest_density);
}

double plastic_wave_speed_perfect(const MaterialProperties& mat) {
  return std::sqrt(mat.bulk_modulus / mat.rest_density);
}

double general_wave_speed(const MaterialProperties& mat, int beta,
                          double modulus, double rho) {
  const double mu = mat.shear_modulus;
  const double softening = static_cast<double>(beta) / (1.0 + modulus / (3.0 * mu));
  return std::sqrt((mat.bulk_modulus + 4.0 / 3.0 * mu * (1.0 - softening)) / rho);
}

double general_wave_speed(const MaterialProperties& mat, int beta, double modulus) {
  return general_wave_speed(mat, beta, modulus, mat.rest_density);
}

}  // namespace ceseplast
