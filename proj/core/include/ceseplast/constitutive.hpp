#pragma once

#include <cstddef>

#include "ceseplast/material.hpp"

namespace ceseplast {

/// Per-cell hardening history.
///
/// `yield_radius` is the current size of the yield surface measured in S11
/// (|S11| = 2 sigma_y / 3 on the surface). Within one material point none of
/// the fields decreases; `eff_plastic_strain` is the uniaxial-strain measure
/// |eps^p_11|.
struct PlasticState {
  double yield_radius = 0.0;        // [Pa]
  double eff_plastic_strain = 0.0;  // [-]
  std::size_t stage = 0;

  static PlasticState initial(const MaterialProperties& mat);

  bool operator==(const PlasticState&) const = default;
};

enum class LoadingClass { Elastic, UnloadingOrNeutral, PlasticLoading };

constexpr int gamma_of(LoadingClass c) noexcept {
  return c == LoadingClass::PlasticLoading ? 1 : 0;
}

const char* to_string(LoadingClass c) noexcept;

/// s = S_mn S_mn for the uniaxial-strain deviator (S22 = S33 = -S11/2).
double deviatoric_invariant(double s11);

/// von Mises F = S_ij S_ij / 2 - sigma_y^2 / 3 in uniaxial strain.
double yield_function(double s11, double yield_stress);

/// sigma_bar = sqrt(1.5 S_ij S_ij) = 1.5 |S11|.
double effective_stress(double s11);

/// Relative slack used when deciding whether a stress sits on the yield
/// surface.
inline constexpr double kYieldSurfaceTolerance = 1e-9;

/// F < 0 -> Elastic. On the surface, plastic loading iff S11 * dS11 > 0.
LoadingClass classify_loading(double s11, double ds11, const PlasticState& plastic);

/// (4/3) mu (1 - gamma / (1 + B / 3 mu)).
double plastic_source_coefficient(int gamma, const MaterialProperties& mat,
                                  double modulus);

struct ActiveHardening {
  double yield_stress;  // [Pa]
  double modulus;       // [Pa]
};

/// Yield stress and modulus of the stage recorded in `plastic`.
/// Throws std::out_of_range when the stage index is past the stage list.
ActiveHardening hardening_lookup(const PlasticState& plastic,
                                 const MaterialProperties& mat);

/// Highest stage whose yield stress is reached by `effective`.
std::size_t stage_for_effective_stress(double effective, const MaterialProperties& mat);

/// History of a node born between two parents: radius and plastic strain
/// averaged, stage re-derived from the averaged radius.
PlasticState blend_history(const PlasticState& a, const PlasticState& b,
                           const MaterialProperties& mat);

struct ReturnMapping {
  double stress;  // corrected S11 [Pa]
  PlasticState state;
  bool yielded;
};

/// Pull an elastic trial S11 back toward the yield surface.
///
/// Inside the current surface the trial stress is returned unchanged. Outside,
/// the excess over the surface is scaled by B / (3 mu + B) of the active stage;
/// when the hardened stress crosses into the next stage the remainder of the
/// excess is handled with that stage's modulus.
ReturnMapping radial_return(double s_trial, const PlasticState& plastic,
                            const MaterialProperties& mat);

}  // namespace ceseplast
