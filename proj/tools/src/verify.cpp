#include <algorithm>
#include <cmath>
#include <random>

#include "cyclegas/cycle_weights.hpp"
#include "cyclegas/observables.hpp"
#include "cyclegas/oracle.hpp"
#include "cyclegas/partition.hpp"
#include "cyclegas_cli/cli.hpp"

namespace cyclegas::cli {
namespace {

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

CheckResult check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

CheckResult log_z_three_way() {
  double worst = 0.0;
  const int cutoff = certified_cycle_cutoff(1e-12);
  for (double t : {0.1, 1.0, 10.0}) {
    for (double v : {1.0, 10.0}) {
      const ThermoState state(t, v);
      const double integral = log_grand_partition_integral(state);
      const auto series = log_grand_partition_cycle_series(state, cutoff);
      const auto product = grand_partition_product_form(state, cutoff);
      const double product_log = product.back().log_partial_product + (series.value - series.partial_sum);
      worst = std::max({worst, rel(integral, series.value), rel(integral, product_log)});
    }
  }
  return check("log_z_three_way", worst, 1e-10);
}

CheckResult recursion_vs_enumeration() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  double worst = 0.0;
  bool counts_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> c(kDefaultEnumerationLimit);
    for (double& x : c) x = u(rng);
    const CycleSumSequence cycles(c);
    const auto table = canonical_partition_table(cycles, kDefaultEnumerationLimit);
    for (int n = 0; n <= kDefaultEnumerationLimit; ++n) {
      const auto e = canonical_partition_enumerated(cycles, n);
      worst = std::max(worst, rel(e.total, table[n]));
      counts_ok = counts_ok && e.permutation_count_sum == factorial_u128(n);
    }
  }
  auto r = check("recursion_vs_enumeration", worst, 1e-12);
  r.passed = r.passed && counts_ok;
  return r;
}

ModeSpectrum random_spectrum(std::mt19937_64& rng, int max_modes) {
  std::uniform_int_distribution<int> count(1, max_modes);
  std::uniform_real_distribution<double> energy(1e-3, 3.0);
  std::vector<double> e(count(rng));
  for (double& x : e) x = energy(rng);
  std::sort(e.begin(), e.end());
  return ModeSpectrum::nondegenerate(std::move(e));
}

CheckResult oracle_triple_agreement() {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> n_dist(0, 8);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto spectrum = random_spectrum(rng, 6);
    const int n = n_dist(rng);
    for (double beta : {0.5, 1.0, 2.0}) {
      const double occ = canonical_by_occupation(spectrum, n, beta);
      const double perm = canonical_by_permutations(spectrum, n, beta);
      const double rec = canonical_partition_recursive(spectrum_cycle_sums(spectrum, beta, std::max(n, 1)), n);
      worst = std::max({worst, rel(occ, perm), rel(occ, rec), rel(perm, rec)});
    }
  }
  return check("oracle_triple_agreement", worst, 1e-12);
}

CheckResult grand_product_vs_cycle() {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto spectrum = random_spectrum(rng, 6);
    const double beta = 0.5 + 1.5 * u(rng);
    const double z = std::min(1.0, 0.9 * u(rng) * std::exp(beta * spectrum.min_energy()));
    worst = std::max(worst, rel(grand_partition_cycle(spectrum, z, beta), grand_partition_product(spectrum, z, beta)));
  }
  return check("grand_product_vs_cycle", worst, 1e-10);
}

CheckResult band_identity() {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ThermoState state(std::pow(10.0, u(rng)));
    const double nu = std::pow(10.0, u(rng)) * state.temperature();
    const BandSpec band{nu, 0.1 * nu * (0.05 + 0.95 * (u(rng) + 1.0) / 2.0), 1e3 / (nu * nu * nu)};
    const auto b = band_fluctuation(state, band);
    worst = std::max(worst, std::abs(b.particle_term + b.wave_term - b.relative_fluctuation) /
                                b.relative_fluctuation);
  }
  return check("band_fluctuation_identity", worst, 1e-12);
}

CheckResult cycle_weight_quadrature() {
  double worst = 0.0;
  for (double t : {0.1, 1.0, 10.0}) {
    const ThermoState state(t);
    for (int s = 1; s <= 20; ++s) {
      for (const auto& d : {Dispersion::photon(), Dispersion::massive(2.0 * M_PI)}) {
        worst = std::max(worst, rel(cycle_weight_by_quadrature(d, state, s).value,
                                    closed_form_cycle_weight(d, state, s).value));
      }
    }
  }
  return check("cycle_weight_quadrature", worst, 1e-8);
}

CheckResult bose_density_routes() {
  double worst = 0.0;
  for (double z : {0.1, 0.5, 0.9, 1.0}) {
    const ThermoState state(1.0, 1.0, z);
    const double mass = 2.0 * M_PI;
    worst = std::max(worst, rel(bose_number_density_cycle(state, mass), bose_number_density_integral(state, mass)));
  }
  return check("bose_density_routes", worst, 1e-8);
}

CheckResult stefan_boltzmann_routes() {
  double worst = 0.0;
  for (double t : {0.1, 1.0, 10.0}) {
    const ThermoState state(t);
    const double exact = M_PI * M_PI / 15.0 * std::pow(t, 4);
    worst = std::max({worst, rel(mean_energy(state), exact), rel(spectral_energy_density_integral(state), exact)});
  }
  return check("stefan_boltzmann_routes", worst, 1e-8);
}

CheckResult photon_density_routes() {
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const ThermoState state(t);
    worst = std::max(worst, rel(photon_number_density(state), photon_number_density_cycle_sum(state)));
  }
  return check("photon_density_routes", worst, 1e-10);
}

CheckResult variance_finite_difference() {
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const ThermoState state(t);
    worst = std::max(worst, rel(energy_variance(state).variance, energy_variance_finite_difference(state)));
  }
  return check("variance_finite_difference", worst, 1e-5);
}

}  // namespace

std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> out;
  out.push_back(log_z_three_way());
  out.push_back(recursion_vs_enumeration());
  out.push_back(oracle_triple_agreement());
  out.push_back(grand_product_vs_cycle());
  out.push_back(band_identity());
  out.push_back(cycle_weight_quadrature());
  out.push_back(bose_density_routes());
  out.push_back(stefan_boltzmann_routes());
  out.push_back(photon_density_routes());
  out.push_back(variance_finite_difference());
  return out;
}

}  // namespace cyclegas::cli
