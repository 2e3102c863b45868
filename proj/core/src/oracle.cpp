#include "ceseplast/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace ceseplast::oracle {

double linear_wave_speed(const MaterialProperties& mat, int beta, double modulus) {
  const double mu = mat.shear_modulus;
  const double shear_part =
      beta == 0 ? 4.0 * mu / 3.0 : 4.0 * mu / 3.0 * modulus / (3.0 * mu + modulus);
  return std::sqrt((mat.bulk_modulus + shear_part) / mat.rest_density);
}

double dalembert(const std::function<double(double)>& profile, double c, double x, double t) {
  return profile(x - c * t);
}

double uniaxial_strain_stress(double strain, const MaterialProperties& mat) {
  if (strain < 0.0) throw std::invalid_argument("uniaxial_strain_stress: strain must be >= 0");
  const double k = mat.bulk_modulus;
  const double mu = mat.shear_modulus;
  const double yield_strain = mat.initial_yield / (2.0 * mu);
  if (strain <= yield_strain) return (k + 4.0 * mu / 3.0) * strain;
  return k * strain + 2.0 * mat.initial_yield / 3.0;
}

double hugoniot_elastic_limit(const MaterialProperties& mat) {
  const double yield_strain = mat.initial_yield / (2.0 * mat.shear_modulus);
  return (mat.bulk_modulus + 4.0 * mat.shear_modulus / 3.0) * yield_strain;
}

PlateauPrediction impact_plateaus(double impact_speed, const MaterialProperties& mat) {
  if (!(impact_speed > 0.0)) throw std::invalid_argument("impact_plateaus: speed must be > 0");
  const double rho0 = mat.rest_density;
  const double ce = std::sqrt((mat.bulk_modulus + 4.0 * mat.shear_modulus / 3.0) / rho0);
  const double cp = std::sqrt(mat.bulk_modulus / rho0);
  const double hel = hugoniot_elastic_limit(mat);
  const double contact = 0.5 * impact_speed;
  const double precursor_jump = hel / (rho0 * ce);

  auto density_at = [&](double pressure) {
    return rho0 * std::exp((pressure - mat.reference_pressure) / mat.bulk_modulus);
  };

  PlateauPrediction out{};
  out.plateau_particle_velocity = contact;
  if (contact <= precursor_jump) {
    const double strain = contact / ce;
    const double s11 = -4.0 / 3.0 * mat.shear_modulus * strain;
    out.elastic_only = true;
    out.plateau_axial_stress = -rho0 * ce * contact;
    out.plateau_pressure = s11 - out.plateau_axial_stress;
    out.plateau_density = density_at(out.plateau_pressure);
    out.precursor_particle_velocity = contact;
    out.precursor_axial_stress = out.plateau_axial_stress;
    out.precursor_density = out.plateau_density;
    return out;
  }

  const double s_yield = -2.0 * mat.initial_yield / 3.0;
  out.elastic_only = false;
  out.precursor_particle_velocity = precursor_jump;
  out.precursor_axial_stress = -hel;
  out.precursor_density = density_at(s_yield + hel);
  out.plateau_axial_stress = -(hel + rho0 * cp * (contact - precursor_jump));
  out.plateau_pressure = s_yield - out.plateau_axial_stress;
  out.plateau_density = density_at(out.plateau_pressure);
  return out;
}

}  // namespace ceseplast::oracle
