#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cyclegas/partition.hpp"
#include "cyclegas/random.hpp"
#include "cyclegas/thermo_state.hpp"

namespace cyclegas {

/// Monte Carlo setup for the grand-canonical photon gas. The cycle counts
/// xi_s are independent Poisson variables with means V f_s / s, truncated
/// at s_max.
struct SampleConfig {
  std::uint64_t seed = 1;
  int replicas = 1000;
  int s_max = 50;
  ThermoState state{1.0};
  /// 0 selects std::thread::hardware_concurrency(). Results do not depend on it.
  int threads = 0;

  void validate() const;
};

struct Estimate {
  double mean;
  double se;
};

struct SampleReport {
  /// "energy", "photon_number", "energy_variance", "photon_number_variance",
  /// "mean_cycle_energy" and "cycle_energy_s<k>" for every s with >= 2 cycles.
  std::map<std::string, Estimate> estimates;
  /// s -> total number of photons found in s-cycles over all replicas.
  std::map<int, std::uint64_t> histogram;
  int n_replicas = 0;
  SampleConfig config;
  /// V * sum_{s > s_max} f_s / s, the Poisson mass of the neglected cycles.
  double truncation_tail = 0.0;
};

/// Poisson means V f_s / s for s = 1..s_max.
std::vector<double> cycle_poisson_means(const ThermoState& state, int s_max);

/// Sum over s > s_max of V f_s / s (midpoint of the integral bracket).
double cycle_truncation_tail(const ThermoState& state, int s_max);

/// Exact Poisson variate: multiplication method below mean 10,
/// transformed rejection (PTRS) above.
std::uint64_t sample_poisson(double mean, SplitMix64& rng);

/// One independent Poisson count per entry of means, each from its own
/// stream of the given replica. Zero means give zero counts.
CycleDistribution sample_cycle_counts(std::span<const double> means, std::uint64_t seed,
                                      std::uint64_t replica);

/// One draw of {xi_s}; replica selects the stream family.
CycleDistribution sample_cycle_configuration(const SampleConfig& config, std::uint64_t replica = 0);

/// Energy of one s-cycle: the shared momentum is Gamma(3, beta s)
/// distributed and the cycle energy is s p, drawn as
/// -T (ln u1 + ln u2 + ln u3). The s-dependence cancels exactly.
double sample_cycle_energy(int s, const ThermoState& state, SplitMix64& rng);

/// Runs config.replicas independent replicas and reduces them in replica
/// order, so the report is bit-identical for a fixed seed.
SampleReport estimate_observables(const SampleConfig& config);

/// JSON document {"estimates": {...}, "histogram": {...}, "config": {...}}.
/// Numbers are rounded to 9 significant digits.
std::string to_json(const SampleReport& report);

/// CSV "s,photon_count".
std::string histogram_csv(const SampleReport& report);

}  // namespace cyclegas
