#include "ceseplast/constitutive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ceseplast {

PlasticState PlasticState::initial(const MaterialProperties& mat) {
  return {2.0 * mat.initial_yield / 3.0, 0.0, 0};
}

const char* to_string(LoadingClass c) noexcept {
  switch (c) {
    case LoadingClass::Elastic:
      return "elastic";
    case LoadingClass::UnloadingOrNeutral:
      return "unloading";
    case LoadingClass::PlasticLoading:
      return "plastic";
  }
  return "?";
}

double deviatoric_invariant(double s11) { return 1.5 * s11 * s11; }

double yield_function(double s11, double yield_stress) {
  return 0.5 * deviatoric_invariant(s11) - yield_stress * yield_stress / 3.0;
}

double effective_stress(double s11) { return 1.5 * std::abs(s11); }

LoadingClass classify_loading(double s11, double ds11, const PlasticState& plastic) {
  if (std::abs(s11) < plastic.yield_radius * (1.0 - kYieldSurfaceTolerance)) {
    return LoadingClass::Elastic;
  }
  return s11 * ds11 > 0.0 ? LoadingClass::PlasticLoading
                          : LoadingClass::UnloadingOrNeutral;
}

double plastic_source_coefficient(int gamma, const MaterialProperties& mat,
                                  double modulus) {
  const double mu = mat.shear_modulus;
  return 4.0 / 3.0 * mu * (1.0 - static_cast<double>(gamma) / (1.0 + modulus / (3.0 * mu)));
}

PlasticState blend_history(const PlasticState& a, const PlasticState& b,
                           const MaterialProperties& mat) {
  PlasticState out;
  out.yield_radius = 0.5 * (a.yield_radius + b.yield_radius);
  out.eff_plastic_strain = 0.5 * (a.eff_plastic_strain + b.eff_plastic_strain);
  out.stage = stage_for_effective_stress(effective_stress(out.yield_radius), mat);
  return out;
}

ActiveHardening hardening_lookup(const PlasticState& plastic,
                                 const MaterialProperties& mat) {
  const auto& stage = mat.hardening_stages.at(plastic.stage);
  return {stage.yield_stress, stage.modulus};
}

std::size_t stage_for_effective_stress(double effective, const MaterialProperties& mat) {
  std::size_t stage = 0;
  for (std::size_t i = 1; i < mat.hardening_stages.size(); ++i) {
    if (effective >= mat.hardening_stages[i].yield_stress) stage = i;
  }
  return stage;
}

ReturnMapping radial_return(double s_trial, const PlasticState& plastic,
                            const MaterialProperties& mat) {
  const double magnitude = std::abs(s_trial);
  if (magnitude <= plastic.yield_radius) return {s_trial, plastic, false};

  const double mu = mat.shear_modulus;
  const auto& stages = mat.hardening_stages;
  PlasticState next = plastic;
  double radius = plastic.yield_radius;
  double excess = magnitude - radius;

  while (excess > 0.0) {
    const double modulus = stages.at(next.stage).modulus;
    const double retained = modulus / (3.0 * mu + modulus);
    const bool has_next = next.stage + 1 < stages.size();
    const double ceiling =
        has_next ? 2.0 * stages[next.stage + 1].yield_stress / 3.0 : INFINITY;
    if (retained > 0.0 && has_next && radius + excess * retained >= ceiling) {
      excess -= (ceiling - radius) / retained;
      radius = ceiling;
      ++next.stage;
      continue;
    }
    radius += excess * retained;
    excess = 0.0;
  }

  // A stage may also be entered through the stress level alone (e.g. an
  // elastic overshoot past several thresholds).
  next.stage = std::max(next.stage, stage_for_effective_stress(effective_stress(radius), mat));
  const double corrected = std::copysign(radius, s_trial);
  next.yield_radius = std::max(plastic.yield_radius, radius);
  next.eff_plastic_strain +=
      (magnitude - radius) / (2.0 * mu);
  return {corrected, next, true};
}

}  // namespace ceseplast
