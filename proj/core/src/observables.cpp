#include "cyclegas/observables.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cyclegas/cycle_weights.hpp"
#include "cyclegas/errors.hpp"
#include "cyclegas/partition.hpp"
#include "cyclegas/quadrature.hpp"
#include "cyclegas/special_functions.hpp"

namespace cyclegas {
namespace {

using std::numbers::pi;
constexpr double kPlanck = 2.0 * pi;  // h in units where hbar = 1

double log_z_at_beta(const ThermoState& state, double beta) {
  return log_grand_partition_integral(state.with_temperature(1.0 / beta));
}

double photon_weight_prefactor(const ThermoState& state) {
  const double t = state.temperature();
  return 2.0 / (pi * pi) * t * t * t * state.volume();
}

}  // namespace

double mean_energy(const ThermoState& state) {
  return 3.0 * state.temperature() * log_grand_partition_integral(state);
}

double mean_energy_finite_difference(const ThermoState& state, double relative_step) {
  require_photon_gas(state);
  const double beta = state.beta();
  const double h = relative_step * beta;
  return (log_z_at_beta(state, beta - h) - log_z_at_beta(state, beta + h)) / (2.0 * h);
}

double spectral_energy_density_integral(const ThermoState& state) {
  require_photon_gas(state);
  // x = h nu / T runs to 60; the remainder is ~ 60^3 e^-60 of the total.
  const double nu_max = 60.0 * state.temperature() / kPlanck;
  const auto result = integrate(
      [&state](double nu) { return nu > 0.0 ? planck_spectral_density(state, nu) : 0.0; }, 0.0,
      nu_max, 1e-13);
  return result.value;
}

double photon_number_density(const ThermoState& state) {
  require_photon_gas(state);
  const double t = state.temperature();
  return 2.0 / (pi * pi) * t * t * t * riemann_zeta(3.0);
}

double photon_number_density_cycle_sum(const ThermoState& state, int s_max) {
  require_photon_gas(state);
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  // Each s-cycle holds s photons and occurs V f_s / s times on average.
  double sum = 0.0;
  for (int s = s_max; s >= 1; --s) sum += photon_cycle_weight(state, s).value;
  const double n = s_max;
  const double lower = 1.0 / (2.0 * (n + 1.0) * (n + 1.0));
  const double upper = 1.0 / (2.0 * n * n);
  return sum + photon_weight_prefactor(state) / state.volume() * 0.5 * (lower + upper);
}

double coherence_volume_photon_count(const ThermoState& state) {
  const double length = 1.0 / state.temperature();  // hbar c / k_B T
  return photon_number_density(state) * length * length * length;
}

FluctuationReport energy_variance(const ThermoState& state, int s_max) {
  require_photon_gas(state);
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  const double t = state.temperature();
  const double log_z = log_grand_partition_integral(state);

  FluctuationReport report{};
  report.mean_energy = 3.0 * t * log_z;
  report.variance = 12.0 * t * t * log_z;
  for (int s = 1; s <= s_max; ++s) {
    report.per_cycle_contribution[s] =
        12.0 * t * t * state.volume() * photon_cycle_weight(state, s).value / s;
  }
  const double n = s_max;
  const double lower = 1.0 / (3.0 * (n + 1.0) * (n + 1.0) * (n + 1.0));
  const double upper = 1.0 / (3.0 * n * n * n);
  const double scale = 12.0 * t * t * photon_weight_prefactor(state);
  report.tail = scale * 0.5 * (lower + upper);
  report.tail_uncertainty = scale * 0.5 * (upper - lower);
  report.relative_fluctuation = report.variance / (report.mean_energy * report.mean_energy);
  return report;
}

double energy_variance_finite_difference(const ThermoState& state, double relative_step) {
  require_photon_gas(state);
  const double beta = state.beta();
  const double h = relative_step * beta;
  const double f_m2 = log_z_at_beta(state, beta - 2.0 * h);
  const double f_m1 = log_z_at_beta(state, beta - h);
  const double f_0 = log_z_at_beta(state, beta);
  const double f_p1 = log_z_at_beta(state, beta + h);
  const double f_p2 = log_z_at_beta(state, beta + 2.0 * h);
  return (-f_p2 + 16.0 * f_p1 - 30.0 * f_0 + 16.0 * f_m1 - f_m2) / (12.0 * h * h);
}

double band_mode_count(const BandSpec& band) {
  return 8.0 * pi * band.volume * band.nu * band.nu * band.delta_nu;
}

BandFluctuation band_fluctuation(const ThermoState& state, const BandSpec& band) {
  require(band.nu > 0.0 && band.delta_nu > 0.0 && band.volume > 0.0, ErrorCode::domain,
          "band needs positive nu, delta_nu and volume");
  require(band.delta_nu <= 0.1 * band.nu, ErrorCode::domain,
          "band too wide: delta_nu must not exceed 0.1 nu");
  return band_fluctuation_from_modes(state, kPlanck * band.nu, band_mode_count(band));
}

BandFluctuation band_fluctuation_from_modes(const ThermoState& state, double photon_energy,
                                            double mode_count) {
  require(photon_energy > 0.0, ErrorCode::domain, "photon energy must be positive");
  require(mode_count >= 1.0, ErrorCode::degenerate_band,
          "band holds " + std::to_string(mode_count) + " modes, need at least 1");
  const double n = 1.0 / std::expm1(photon_energy / state.temperature());
  require(n > 0.0, ErrorCode::domain, "mode occupation underflows at h nu / T = " +
                                          std::to_string(photon_energy / state.temperature()));

  BandFluctuation out{};
  out.occupation = n;
  out.mode_count = mode_count;
  out.mean_energy = mode_count * photon_energy * n;
  out.variance = mode_count * photon_energy * photon_energy * n * (n + 1.0);
  out.relative_fluctuation = out.variance / (out.mean_energy * out.mean_energy);
  out.particle_term = photon_energy / out.mean_energy;
  out.wave_term = 1.0 / mode_count;
  return out;
}

double planck_spectral_density(const ThermoState& state, double nu) {
  require(nu > 0.0, ErrorCode::domain, "frequency must be positive");
  const double x = kPlanck * nu / state.temperature();
  return 8.0 * pi * kPlanck * nu * nu * nu / std::expm1(x);
}

double rayleigh_jeans_spectral_density(const ThermoState& state, double nu) {
  require(nu > 0.0, ErrorCode::domain, "frequency must be positive");
  return 8.0 * pi * nu * nu * state.temperature();
}

double planck_shape(double x) {
  require(x > 0.0, ErrorCode::domain, "x must be positive");
  return x * x * x / std::expm1(x);
}

double wien_peak_x() {
  // Newton on g(x) = 3 (1 - e^-x) - x.
  double x = 3.0;
  for (int it = 0; it < 50; ++it) {
    const double e = std::exp(-x);
    const double step = (3.0 * (1.0 - e) - x) / (3.0 * e - 1.0);
    x -= step;
    if (std::abs(step) < 1e-15 * x) return x;
  }
  throw Error(ErrorCode::convergence, "Wien peak iteration did not converge");
}

}  // namespace cyclegas
