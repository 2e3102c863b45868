#pragma once

#include <functional>

#include "ceseplast/material.hpp"

namespace ceseplast::oracle {

/// Small-amplitude wave speed about the rest state, written through the
/// tangent modulus K + (4/3) mu B / (3 mu + B) rather than the switch form.
double linear_wave_speed(const MaterialProperties& mat, int beta, double modulus);

/// Right-running solution g(x - c t) of the linear wave equation.
double dalembert(const std::function<double(double)>& profile, double c, double x, double t);

/// Monotone uniaxial-strain stress-strain curve (compression positive):
/// (K + 4mu/3) eps below the yield strain sigma_y0 / (2 mu), K eps + 2 sigma_y0 / 3 above.
/// Throws std::invalid_argument for eps < 0.
double uniaxial_strain_stress(double strain, const MaterialProperties& mat);

/// Axial stress magnitude at first yield in uniaxial strain.
double hugoniot_elastic_limit(const MaterialProperties& mat);

/// Acoustic prediction for a bar hitting an identical stationary bar.
/// Stresses use the tension-positive convention, so compressive values are
/// negative; pressure is positive in compression.
struct PlateauPrediction {
  double precursor_particle_velocity;  // [m/s], behind the elastic precursor
  double precursor_axial_stress;       // T11 [Pa]
  double precursor_density;            // [kg/m^3]
  double plateau_particle_velocity;    // [m/s], contact velocity
  double plateau_axial_stress;         // T11 [Pa]
  double plateau_pressure;             // [Pa]
  double plateau_density;              // [kg/m^3]
  bool elastic_only;                   // impact below the elastic limit: single wave
};

/// Perfectly plastic two-wave structure (elastic precursor at the elastic
/// impedance, plastic wave at the bulk impedance). Throws
/// std::invalid_argument for non-positive impact speeds.
PlateauPrediction impact_plateaus(double impact_speed, const MaterialProperties& mat);

}  // namespace ceseplast::oracle
