#include <gtest/gtest.h>

#include <cmath>

#include "ceseplast/constitutive.hpp"
#include "copper.hpp"

using namespace ceseplast;
using testing_support::uniform;

namespace {

const MaterialProperties cu = MaterialProperties::copper();

PlasticState at_radius(double r) { return {r, 0.0, 0}; }

MaterialProperties hardening(double b) {
  MaterialProperties m = cu;
  m.hardening_stages = {{m.initial_yield, b}};
  return m;
}

MaterialProperties staged(int n) {
  MaterialProperties m = cu;
  m.initial_yield = 6.0e7;
  const HardeningStage all[] = {{6.0e7, 2e11}, {8.0e7, 1.2e11}, {1.0e8, 7e10}, {1.2e8, 3e10}};
  m.hardening_stages.assign(all, all + n);
  return m;
}

}  // namespace

TEST(Invariants, DeviatoricInvariant) {
  EXPECT_EQ(deviatoric_invariant(0.0), 0.0);
  EXPECT_DOUBLE_EQ(deviatoric_invariant(6e7), 5.4e15);
  EXPECT_EQ(deviatoric_invariant(-3e7), deviatoric_invariant(3e7));
}

TEST(Invariants, YieldFunctionExamples) {
  EXPECT_NEAR(yield_function(6e7, 9e7), 0.0, 1.0);
  EXPECT_DOUBLE_EQ(yield_function(0.0, 9e7), -8.1e15 / 3.0);
  EXPECT_NEAR(yield_function(8e7, 9e7), 2.1e15, 1.0);
}

TEST(Invariants, YieldSurfaceAtTwoThirdsOfYieldStress) {
  for (double sy : {6e7, 9e7, 1.2e8}) {
    EXPECT_NEAR(yield_function(2.0 * sy / 3.0, sy), 0.0, 1e-12 * sy * sy);
    EXPECT_LT(yield_function(0.99 * 2.0 * sy / 3.0, sy), 0.0);
    EXPECT_GT(yield_function(1.01 * 2.0 * sy / 3.0, sy), 0.0);
  }
}

TEST(Invariants, EffectiveStress) {
  EXPECT_EQ(effective_stress(0.0), 0.0);
  EXPECT_DOUBLE_EQ(effective_stress(6e7), 9e7);
  EXPECT_EQ(effective_stress(-6e7), effective_stress(6e7));
}

TEST(PlasticStateInit, StartsOnInitialSurface) {
  const PlasticState p = PlasticState::initial(cu);
  EXPECT_DOUBLE_EQ(p.yield_radius, 6e7);
  EXPECT_EQ(p.eff_plastic_strain, 0.0);
  EXPECT_EQ(p.stage, 0u);
}

TEST(Classification, SwitchTableRows) {
  const PlasticState p = at_radius(6e7);
  EXPECT_EQ(classify_loading(3e7, 1e5, p), LoadingClass::Elastic);
  EXPECT_EQ(classify_loading(3e7, -1e5, p), LoadingClass::Elastic);
  EXPECT_EQ(classify_loading(6e7, -1e5, p), LoadingClass::UnloadingOrNeutral);
  EXPECT_EQ(classify_loading(6e7, 1e5, p), LoadingClass::PlasticLoading);
  EXPECT_EQ(classify_loading(-6e7, -1e5, p), LoadingClass::PlasticLoading);
  EXPECT_EQ(classify_loading(6e7, 0.0, p), LoadingClass::UnloadingOrNeutral);
}

TEST(Classification, GammaOnlyForPlasticLoading) {
  EXPECT_EQ(gamma_of(LoadingClass::Elastic), 0);
  EXPECT_EQ(gamma_of(LoadingClass::UnloadingOrNeutral), 0);
  EXPECT_EQ(gamma_of(LoadingClass::PlasticLoading), 1);
}

TEST(SourceCoefficient, Examples) {
  EXPECT_NEAR(plastic_source_coefficient(0, cu, 0.0), 6.0e10, 1e-3);
  EXPECT_EQ(plastic_source_coefficient(1, cu, 0.0), 0.0);
  EXPECT_NEAR(plastic_source_coefficient(1, cu, 1.35e11), 3.0e10, 1e-3);
}

TEST(SourceCoefficientProperty, ElasticValueIndependentOfModulus) {
  const double elastic = 4.0 * cu.shear_modulus / 3.0;
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(plastic_source_coefficient(0, cu, uniform(0.0, 1e12)), elastic);
  }
}

TEST(RadialReturn, PerfectPlasticityReturnsToRadius) {
  const ReturnMapping r = radial_return(7e7, at_radius(6e7), cu);
  EXPECT_TRUE(r.yielded);
  EXPECT_DOUBLE_EQ(r.stress, 6e7);
  EXPECT_DOUBLE_EQ(r.state.yield_radius, 6e7);
}

TEST(RadialReturn, InsideSurfaceUnchanged) {
  const ReturnMapping r = radial_return(5e7, at_radius(6e7), cu);
  EXPECT_FALSE(r.yielded);
  EXPECT_EQ(r.stress, 5e7);
  EXPECT_EQ(r.state, at_radius(6e7));
}

TEST(RadialReturn, CompressiveTrial) {
  EXPECT_DOUBLE_EQ(radial_return(-7e7, at_radius(6e7), cu).stress, -6e7);
}

TEST(RadialReturn, LinearHardeningKeepsFraction) {
  // B / 3 mu = 0.1
  const ReturnMapping r = radial_return(7e7, at_radius(6e7), hardening(1.35e10));
  EXPECT_NEAR(r.stress, 7e7 - 1e7 / 1.1, 1e-6);
  EXPECT_NEAR(r.stress, 6.0909e7, 1e3);
  EXPECT_NEAR(r.state.yield_radius, r.stress, 1e-6);
}

TEST(RadialReturn, PlasticStrainIsUniaxialMeasure) {
  const ReturnMapping r = radial_return(7e7, at_radius(6e7), cu);
  EXPECT_NEAR(r.state.eff_plastic_strain, 1e7 / (2.0 * 4.5e10), 1e-18);
}

TEST(RadialReturn, CrossesIntoNextStage) {
  const MaterialProperties m = staged(2);
  // Radius 6e7/1.5 = 4e7; the second stage starts at radius 8e7/1.5.
  const double r0 = 4e7;
  const double next = 2.0 * 8e7 / 3.0;
  const double f1 = 2e11 / (1.35e11 + 2e11);
  const double f2 = 1.2e11 / (1.35e11 + 1.2e11);
  const double trial = r0 + (next - r0) / f1 + 1e6;
  const ReturnMapping r = radial_return(trial, {r0, 0.0, 0}, m);
  EXPECT_EQ(r.state.stage, 1u);
  EXPECT_NEAR(r.stress, next + 1e6 * f2, 1e-6);
}

TEST(HardeningLookup, SingleStage) {
  const ActiveHardening h = hardening_lookup(PlasticState::initial(cu), cu);
  EXPECT_EQ(h.yield_stress, 9e7);
  EXPECT_EQ(h.modulus, 0.0);
}

TEST(HardeningLookup, StageSelection) {
  const MaterialProperties two = staged(2);
  EXPECT_EQ(stage_for_effective_stress(7e7, two), 0u);
  EXPECT_EQ(hardening_lookup({7e7 / 1.5, 0.0, 0}, two).yield_stress, 6e7);

  const MaterialProperties three = staged(3);
  const std::size_t s = stage_for_effective_stress(1.1e8, three);
  EXPECT_EQ(s, 2u);
  const ActiveHardening h = hardening_lookup({1.1e8 / 1.5, 0.0, s}, three);
  EXPECT_EQ(h.yield_stress, 1.0e8);
  EXPECT_EQ(h.modulus, 7e10);
}

TEST(HardeningLookup, OutOfRangeStageThrows) {
  EXPECT_THROW(hardening_lookup({6e7, 0.0, 3}, cu), std::out_of_range);
}

TEST(BlendHistory, AveragesAndRederivesStage) {
  const MaterialProperties m = staged(4);
  const PlasticState a{4e7, 1e-4, 0};
  const PlasticState b{7e7, 3e-4, 2};
  const PlasticState c = blend_history(a, b, m);
  EXPECT_DOUBLE_EQ(c.yield_radius, 5.5e7);
  EXPECT_DOUBLE_EQ(c.eff_plastic_strain, 2e-4);
  EXPECT_EQ(c.stage, 1u);  // effective 8.25e7
}

TEST(RadialReturnProperty, YieldContainment) {
  for (int i = 0; i < 300; ++i) {
    const MaterialProperties m = i % 3 == 0 ? cu : (i % 3 == 1 ? hardening(uniform(0, 2e11)) : staged(4));
    PlasticState p = PlasticState::initial(m);
    p.yield_radius *= uniform(1.0, 1.3);
    p.stage = stage_for_effective_stress(effective_stress(p.yield_radius), m);
    const double trial = uniform(-3e8, 3e8);
    const ReturnMapping r = radial_return(trial, p, m);
    EXPECT_LE(std::abs(r.stress), r.state.yield_radius * (1.0 + 1e-12));
    EXPECT_LE(std::abs(r.stress), std::abs(trial));
    EXPECT_GE(r.state.yield_radius, p.yield_radius);
    EXPECT_GE(r.state.eff_plastic_strain, p.eff_plastic_strain);
  }
}

TEST(RadialReturnProperty, OddSymmetry) {
  for (int i = 0; i < 300; ++i) {
    const MaterialProperties m = i % 2 ? hardening(uniform(0, 2e11)) : staged(4);
    const PlasticState p = PlasticState::initial(m);
    const double trial = uniform(0.0, 3e8);
    const ReturnMapping pos = radial_return(trial, p, m);
    const ReturnMapping neg = radial_return(-trial, p, m);
    EXPECT_EQ(neg.stress, -pos.stress);
    EXPECT_EQ(neg.state, pos.state);
    EXPECT_EQ(neg.yielded, pos.yielded);
  }
}

TEST(RadialReturnProperty, MonotoneHardeningOverSequences) {
  for (int run = 0; run < 100; ++run) {
    const MaterialProperties m = staged(4);
    PlasticState p = PlasticState::initial(m);
    double s = 0.0;
    for (int i = 0; i < 50; ++i) {
      s += uniform(-3e7, 4e7);
      const ReturnMapping r = radial_return(s, p, m);
      EXPECT_GE(r.state.yield_radius, p.yield_radius);
      EXPECT_GE(r.state.eff_plastic_strain, p.eff_plastic_strain);
      EXPECT_GE(r.state.stage, p.stage);
      p = r.state;
      s = r.stress;
    }
  }
}

TEST(RadialReturnProperty, PerfectPlasticFixedPoint) {
  for (int run = 0; run < 100; ++run) {
    PlasticState p = PlasticState::initial(cu);
    double s = -6e7;
    for (int i = 0; i < 20; ++i) {
      const ReturnMapping r = radial_return(s - uniform(0.0, 5e7), p, cu);
      EXPECT_DOUBLE_EQ(r.stress, -6e7);
      p = r.state;
      s = r.stress;
    }
    EXPECT_DOUBLE_EQ(p.yield_radius, 6e7);
  }
}
