#pragma once

#include <map>

#include "cyclegas/thermo_state.hpp"

namespace cyclegas {

/// Mean energy 3 T log Z = V (pi^2/15) T^4 (log Z is proportional to beta^-3).
double mean_energy(const ThermoState& state);

/// -d log Z / d beta by a central difference of log_grand_partition_integral.
double mean_energy_finite_difference(const ThermoState& state, double relative_step = 1e-4);

/// Energy per volume from the integral of planck_spectral_density over nu.
double spectral_energy_density_integral(const ThermoState& state);

/// (2/pi^2) T^3 zeta(3).
double photon_number_density(const ThermoState& state);

/// sum_{s<=s_max} f_s plus the midpoint of the bracket
/// [1/(2(s_max+1)^2), 1/(2 s_max^2)] on the neglected sum of s^-3.
double photon_number_density_cycle_sum(const ThermoState& state, int s_max = 10000);

/// Mean photon count in a coherence volume (hbar c / k_B T)^3, i.e. 2 zeta(3)/pi^2.
double coherence_volume_photon_count(const ThermoState& state);

struct FluctuationReport {
  double mean_energy;
  double variance;
  /// 12 T^2 V f_s / s: an s-cycle count is Poisson with mean V f_s / s and
  /// each cycle carries a Gamma(3, beta) energy (second moment 12 T^2).
  std::map<int, double> per_cycle_contribution;
  /// Midpoint estimate of sum_{s>s_max} contributions.
  double tail;
  /// Half-width of the tail bracket.
  double tail_uncertainty;
  double relative_fluctuation;  // variance / mean_energy^2
};

/// Total energy variance d^2 log Z / d beta^2 = 12 T^2 log Z with its
/// decomposition by cycle size for s = 1..s_max.
FluctuationReport energy_variance(const ThermoState& state, int s_max = 200);

/// Five-point finite difference of log_grand_partition_integral in beta.
double energy_variance_finite_difference(const ThermoState& state, double relative_step = 1e-2);

struct BandSpec {
  double nu;
  double delta_nu;
  double volume;
};

struct BandFluctuation {
  double occupation;       // n = 1/(e^{h nu/T} - 1)
  double mode_count;       // rho(nu) delta_nu
  double mean_energy;      // mode_count h nu n
  double variance;         // mode_count (h nu)^2 n (n + 1)
  double relative_fluctuation;  // variance / mean_energy^2
  double particle_term;    // h nu / mean_energy
  double wave_term;        // 1 / mode_count
};

/// Number of radiation modes 8 pi V nu^2 delta_nu (two polarizations).
double band_mode_count(const BandSpec& band);

/// Relative energy fluctuation in a narrow band and its split into the
/// particle (shot-noise) and wave (beat) terms. Throws ErrorCode::domain
/// for nu <= 0, delta_nu <= 0 or delta_nu > 0.1 nu, and
/// ErrorCode::degenerate_band when the band holds fewer than one mode.
BandFluctuation band_fluctuation(const ThermoState& state, const BandSpec& band);

/// Same, parameterized directly by the photon energy h nu and mode count.
BandFluctuation band_fluctuation_from_modes(const ThermoState& state, double photon_energy,
                                            double mode_count);

/// u(nu) = 8 pi h nu^3 / (e^{h nu/T} - 1), with h = 2 pi.
double planck_spectral_density(const ThermoState& state, double nu);

/// Classical limit 8 pi nu^2 T.
double rayleigh_jeans_spectral_density(const ThermoState& state, double nu);

/// x^3 / (e^x - 1).
double planck_shape(double x);

/// Root x* of 3 (1 - e^{-x}) = x, where x^3/(e^x - 1) peaks.
double wien_peak_x();

}  // namespace cyclegas
