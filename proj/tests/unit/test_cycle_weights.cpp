#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cyclegas/cycle_weights.hpp"
#include "cyclegas/errors.hpp"
#include "oracles.hpp"

namespace cyclegas {
namespace {

using std::numbers::pi;
using testing::rel_diff;

constexpr double kUnitMass = 2.0 * pi;  // m T / 2 pi = 1 at T = 1

TEST(PhotonCycleWeight, ClosedFormValues) {
  const ThermoState t1(1.0);
  EXPECT_NEAR(photon_cycle_weight(t1, 1).value, 0.20264237, 5e-9);
  EXPECT_NEAR(photon_cycle_weight(t1, 2).value, 0.025330296, 5e-10);
  EXPECT_LT(rel_diff(photon_cycle_weight(ThermoState(2.0), 1).value, 16.0 / (pi * pi)), 1e-15);
  EXPECT_NEAR(photon_cycle_weight(ThermoState(2.0), 1).value, 1.6211389, 1e-7);
  EXPECT_EQ(photon_cycle_weight(t1, 3).s, 3);
}

TEST(PhotonCycleWeight, ExactScalingLaws) {
  const double f1 = photon_cycle_weight(ThermoState(1.0), 1).value;
  for (int s = 1; s <= 50; ++s) {
    const double fs = photon_cycle_weight(ThermoState(1.0), s).value;
    EXPECT_LT(rel_diff(fs * s * s * s, f1), 4e-16) << s;
    if (s > 1) EXPECT_LT(fs, photon_cycle_weight(ThermoState(1.0), s - 1).value);
  }
  for (double t : {0.1, 2.0, 10.0}) {
    EXPECT_LT(rel_diff(photon_cycle_weight(ThermoState(t), 4).value,
                       t * t * t * photon_cycle_weight(ThermoState(1.0), 4).value),
              4e-16);
  }
}

TEST(MatterCycleWeight, ClosedFormValues) {
  const ThermoState t1(1.0);
  EXPECT_NEAR(matter_cycle_weight(t1, kUnitMass, 1).value, 1.0, 1e-15);
  EXPECT_NEAR(matter_cycle_weight(t1, kUnitMass, 2).value, 0.35355339, 5e-9);
  EXPECT_NEAR(matter_cycle_weight(t1, kUnitMass, 4).value, 0.125, 1e-15);
}

TEST(CycleWeights, RejectBadArguments) {
  EXPECT_THROW(photon_cycle_weight(ThermoState(1.0), 0), Error);
  EXPECT_THROW(matter_cycle_weight(ThermoState(1.0), 0.0, 1), Error);
  EXPECT_THROW(matter_cycle_weight(ThermoState(1.0), 1.0, -2), Error);
  EXPECT_THROW(Dispersion::massive(-1.0), Error);
}

TEST(Dispersion, DefaultsAndEnergies) {
  const auto photon = Dispersion::photon();
  EXPECT_EQ(photon.internal_degeneracy, 2);
  EXPECT_EQ(photon.energy(3.0), 3.0);
  const auto massive = Dispersion::massive(2.0);
  EXPECT_EQ(massive.internal_degeneracy, 1);
  EXPECT_EQ(massive.energy(2.0), 1.0);
}

TEST(CycleWeightQuadrature, ReproducesExamples) {
  const ThermoState t1(1.0);
  EXPECT_NEAR(cycle_weight_by_quadrature(Dispersion::photon(), t1, 1).value, 2.0 / (pi * pi), 1e-9);
  EXPECT_NEAR(cycle_weight_by_quadrature(Dispersion::massive(kUnitMass), t1, 1).value, 1.0, 1e-9);
  EXPECT_LT(rel_diff(cycle_weight_by_quadrature(Dispersion::photon(), t1, 10).value,
                     2.0 / (pi * pi) / 1000.0),
            1e-9);
}

TEST(CycleWeightQuadrature, OracleEquivalenceGrid) {
  for (double t : {0.1, 1.0, 10.0}) {
    const ThermoState state(t);
    for (int s = 1; s <= 20; ++s) {
      for (const auto& d : {Dispersion::photon(), Dispersion::massive(kUnitMass), Dispersion::massive(0.3)}) {
        const double quad = cycle_weight_by_quadrature(d, state, s).value;
        const double closed = closed_form_cycle_weight(d, state, s).value;
        EXPECT_LT(rel_diff(quad, closed), 1e-8) << t << " " << s;
      }
    }
  }
}

TEST(CycleWeightQuadrature, RawMomentumIntegralOracle) {
  // Simpson in the unscaled momentum, straight from the integrand.
  const ThermoState state(1.3);
  const int s = 3;
  const double beta = state.beta();
  const double raw = 2.0 * testing::simpson(
                               [&](double p) {
                                 return std::exp(-beta * p * s) * 4.0 * pi * p * p / std::pow(2.0 * pi, 3);
                               },
                               0.0, 40.0, 100000);
  EXPECT_LT(rel_diff(raw, cycle_weight_by_quadrature(Dispersion::photon(), state, s).value), 1e-10);
}

TEST(CycleWeightQuadrature, DegeneracyOverride) {
  const ThermoState state(1.0);
  const double g2 = cycle_weight_by_quadrature(Dispersion::photon(), state, 2).value;
  const double g1 = cycle_weight_by_quadrature(Dispersion::photon(1), state, 2).value;
  EXPECT_LT(rel_diff(g2, 2.0 * g1), 1e-14);
}

TEST(DecayComparison, PowerLawRows) {
  const auto rows = decay_comparison(8);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].photon_ratio, 1.0);
  EXPECT_EQ(rows[0].matter_ratio, 1.0);
  EXPECT_NEAR(rows[1].photon_ratio, 0.125, 1e-15);
  EXPECT_NEAR(rows[1].matter_ratio, 0.35355339, 5e-9);
  EXPECT_NEAR(rows[3].photon_ratio, 0.015625, 1e-15);
  EXPECT_NEAR(rows[3].matter_ratio, 0.125, 1e-15);
  EXPECT_NEAR(rows[7].photon_ratio, 0.001953125, 1e-15);
  EXPECT_NEAR(rows[7].matter_ratio, 0.044194174, 5e-9);
}

TEST(DecayComparison, DominanceForAllSizes) {
  for (const auto& row : decay_comparison(500)) {
    if (row.s == 1) continue;
    EXPECT_LT(row.photon_ratio, row.matter_ratio);
  }
  EXPECT_THROW(decay_comparison(1), Error);
}

}  // namespace
}  // namespace cyclegas
