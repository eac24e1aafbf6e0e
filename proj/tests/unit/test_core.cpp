#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cyclegas/errors.hpp"
#include "cyclegas/special_functions.hpp"
#include "cyclegas/thermo_state.hpp"
#include "cyclegas/units.hpp"
#include "oracles.hpp"

namespace cyclegas {
namespace {

using std::numbers::pi;
using testing::rel_diff;

TEST(ThermoState, RejectsInvalidParameters) {
  EXPECT_THROW(ThermoState(0.0), Error);
  EXPECT_THROW(ThermoState(-1.0), Error);
  EXPECT_THROW(ThermoState(1.0, 0.0), Error);
  EXPECT_THROW(ThermoState(1.0, 1.0, 1.5), Error);
  EXPECT_THROW(ThermoState(1.0, 1.0, -0.1), Error);
  EXPECT_NO_THROW(ThermoState(1.0, 1.0, 0.0));
}

TEST(ThermoState, BetaIsExactReciprocal) {
  for (double t : {0.1, 1.0, 3.0, 7.5, 1e4}) EXPECT_EQ(ThermoState(t).beta(), 1.0 / t);
}

TEST(ThermoState, PhotonGasNeedsUnitFugacity) {
  EXPECT_NO_THROW(require_photon_gas(ThermoState(1.0)));
  try {
    require_photon_gas(ThermoState(1.0, 1.0, 0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::domain);
  }
}

TEST(Units, NaturalModeIsIdentity) {
  const auto u = UnitsPolicy::natural();
  EXPECT_EQ(u.hbar(), 1.0);
  EXPECT_EQ(u.c(), 1.0);
  EXPECT_EQ(u.k_B(), 1.0);
  const ThermoState s(2.5, 3.0, 0.7);
  EXPECT_EQ(u.to_natural(s), s);
  EXPECT_EQ(u.frequency_to_natural(4.0), 4.0);
}

TEST(Units, SiRoundTripWithin1e12) {
  const auto u = UnitsPolicy::si();
  for (double t : {1e-3, 1.0, 300.0, 5778.0}) {
    for (double v : {1e-9, 1.0, 42.0}) {
      const ThermoState natural(t, v, 1.0);
      const ThermoState back = u.to_natural(u.from_natural(natural));
      EXPECT_LT(rel_diff(back.temperature(), t), 1e-12);
      EXPECT_LT(rel_diff(back.volume(), v), 1e-12);
    }
  }
  EXPECT_LT(rel_diff(u.frequency_to_natural(u.frequency_from_natural(0.37)), 0.37), 1e-12);
  EXPECT_LT(rel_diff(u.mass_to_natural(u.mass_from_natural(11.0)), 11.0), 1e-12);
}

TEST(Units, SiScalesMatchConstants) {
  const auto u = UnitsPolicy::si();
  // One natural temperature unit is one kelvin.
  EXPECT_DOUBLE_EQ(u.temperature_to_natural(300.0), 300.0);
  // hbar c / (k_B * 1 K) = 2.2898e-3 m
  EXPECT_NEAR(u.length_unit(), 2.28980e-3, 1e-7);
}

TEST(RiemannZeta, ClosedForms) {
  EXPECT_LT(rel_diff(riemann_zeta(2.0), pi * pi / 6.0), 1e-13);
  EXPECT_LT(rel_diff(riemann_zeta(4.0), std::pow(pi, 4) / 90.0), 1e-13);
  EXPECT_LT(rel_diff(riemann_zeta(6.0), std::pow(pi, 6) / 945.0), 1e-13);
}

TEST(RiemannZeta, MatchesBracketedPartialSumOracle) {
  // 10^6 terms in long double; the bracket half-width is ~S^-r-1.
  for (double r : {1.5, 2.0, 3.0, 5.0}) {
    const auto ref = testing::zeta_partial_sum(r, 1'000'000);
    EXPECT_LT(std::abs(riemann_zeta(r) - ref.value), 1e-12 * ref.value + ref.half_width) << r;
  }
  // frozen: zeta(3) = 1.2020569031595942
  EXPECT_NEAR(riemann_zeta(3.0), 1.2020569031595942, 1e-15);
  EXPECT_NEAR(riemann_zeta(1.5), 2.6123753486854883, 2e-15);
}

TEST(RiemannZeta, DomainError) {
  EXPECT_THROW(riemann_zeta(1.0), Error);
  EXPECT_THROW(riemann_zeta(0.5), Error);
  EXPECT_NO_THROW(riemann_zeta(1.0 + 1e-6));
  EXPECT_GT(riemann_zeta(1.0 + 1e-6), 1e5);  // pole ~ 1/(r-1)
}

TEST(Polylog, EdgeValues) {
  EXPECT_EQ(polylog(1.5, 0.0), 0.0);
  EXPECT_LT(rel_diff(polylog(4.0, 1.0), std::pow(pi, 4) / 90.0), 1e-13);
  // g_1(z) = -ln(1 - z)
  EXPECT_LT(rel_diff(polylog(1.0, 0.5), std::log(2.0)), 1e-12);
}

TEST(Polylog, MatchesDirectSummationOracle) {
  const double oracle = testing::polylog_direct(1.5, 0.5, 200);
  EXPECT_LT(rel_diff(polylog(1.5, 0.5), oracle), 1e-12);
  EXPECT_NEAR(polylog(1.5, 0.5), 0.62484, 5e-6);
  for (double z : {0.1, 0.3, 0.7, 0.9}) {
    for (double r : {0.5, 1.5, 2.5, 4.0}) {
      EXPECT_LT(rel_diff(polylog(r, z), testing::polylog_direct(r, z, 2000)), 1e-10) << r << " " << z;
    }
  }
}

TEST(Polylog, ZetaAgreementAtUnitFugacity) {
  for (double r : {2.0, 3.0, 4.0, 5.0}) EXPECT_LT(rel_diff(riemann_zeta(r), polylog(r, 1.0)), 1e-12);
}

TEST(Polylog, DomainErrors) {
  EXPECT_THROW(polylog(2.0, 1.01), Error);
  EXPECT_THROW(polylog(2.0, -0.1), Error);
  EXPECT_THROW(polylog(1.0, 1.0), Error);
  EXPECT_THROW(polylog(0.5, 1.0), Error);
}

TEST(BoseIntegral, ClosedForms) {
  EXPECT_LT(rel_diff(bose_integral(3), std::pow(pi, 4) / 15.0), 1e-13);
  EXPECT_LT(rel_diff(bose_integral(1), pi * pi / 6.0), 1e-13);
}

TEST(BoseIntegral, QuadratureRouteMatchesGammaZeta) {
  const double zeta3 = testing::zeta_partial_sum(3.0, 1'000'000).value;
  EXPECT_LT(rel_diff(bose_integral_quadrature(2), 2.0 * zeta3), 1e-10);
  for (int n = 1; n <= 6; ++n) {
    const double closed = std::tgamma(n + 1.0) * riemann_zeta(n + 1.0);
    EXPECT_LT(rel_diff(bose_integral_quadrature(n), closed), 1e-10) << n;
    EXPECT_LT(rel_diff(bose_integral(n), closed), 1e-15) << n;
  }
}

TEST(BoseIntegral, IndependentSimpsonOracle) {
  // Simpson on [0, 60] with the 0/0 point patched; integrand ~ x^{n-1} near 0.
  for (int n : {2, 3}) {
    const double simpson = testing::simpson(
        [n](double x) { return x == 0.0 ? (n == 1 ? 1.0 : 0.0) : std::pow(x, n) / std::expm1(x); },
        0.0, 60.0, 200000);
    EXPECT_LT(rel_diff(bose_integral_quadrature(n), simpson), 1e-10) << n;
  }
}

TEST(BoseIntegral, RejectsNonPositiveOrder) { EXPECT_THROW(bose_integral(0), Error); }

}  // namespace
}  // namespace cyclegas
