#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "cyclegas/partition.hpp"

namespace cyclegas {

/// Finite list of single-particle energies with degeneracies, sorted by
/// energy. Text form: one "energy degeneracy" pair per line, '#' starts a
/// comment.
class ModeSpectrum {
 public:
  ModeSpectrum(std::vector<double> energies, std::vector<int> degeneracies);

  /// Every degeneracy is 1.
  static ModeSpectrum nondegenerate(std::vector<double> energies);

  const std::vector<double>& energies() const noexcept { return energies_; }
  const std::vector<int>& degeneracies() const noexcept { return degeneracies_; }
  double min_energy() const noexcept { return energies_.front(); }
  /// Number of single-particle states, degeneracy expanded.
  int state_count() const noexcept;
  /// The same spectrum with every degenerate level split into separate modes.
  ModeSpectrum expanded() const;

 private:
  std::vector<double> energies_;
  std::vector<int> degeneracies_;
};

/// Parses the text form. Pairs may appear in any order; the result is
/// sorted. Throws ErrorCode::io on malformed lines.
ModeSpectrum parse_mode_spectrum(std::istream& in);
ModeSpectrum load_mode_spectrum(const std::filesystem::path& path);

/// C_s = sum_j g_j exp(-beta e_j s), s = 1..s_max.
CycleSumSequence spectrum_cycle_sums(const ModeSpectrum& spectrum, double beta, int s_max);

/// prod_j (1 - z e^{-beta e_j})^{-g_j}. Throws ErrorCode::divergence unless
/// z e^{-beta e_min} < 1.
double grand_partition_product(const ModeSpectrum& spectrum, double z, double beta);

/// exp(sum_s z^s C_s / s) with s_max picked so that the geometric tail is
/// below 1e-13. Throws ErrorCode::convergence unless z e^{-beta e_min} <= 0.9.
double grand_partition_cycle(const ModeSpectrum& spectrum, double z, double beta);

/// Fixed-length variant, no tail control.
double grand_partition_cycle(const ModeSpectrum& spectrum, double z, double beta, int s_max);

inline constexpr long long kOccupationEnumerationLimit = 10'000'000;

/// Number of Bose occupation vectors of n particles in m states.
long long occupation_vector_count(int n, int m);

/// sum over all occupation vectors {n_j} with sum n_j = N of
/// exp(-beta sum_j n_j e_j). Throws ErrorCode::size when more than
/// kOccupationEnumerationLimit vectors would be visited.
double canonical_by_occupation(const ModeSpectrum& spectrum, int n, double beta);

/// (1/N!) sum over cycle types of N!/(prod xi_s! s^xi_s) prod C_s^xi_s,
/// with its own partition generator and exact integer counts.
/// Throws ErrorCode::size for n > 25.
double canonical_by_permutations(const ModeSpectrum& spectrum, int n, double beta);

/// (1/N!) sum over all N! permutations of prod_{cycles} C_{length}.
/// Throws ErrorCode::size for n > 10.
double canonical_by_explicit_permutations(const ModeSpectrum& spectrum, int n, double beta);

}  // namespace cyclegas
