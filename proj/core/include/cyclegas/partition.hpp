#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cyclegas/thermo_state.hpp"

namespace cyclegas {

using uint128 = unsigned __int128;

/// A cycle type {xi_s}: xi_s cycles of length s, with sum_s s*xi_s = N.
/// Only nonzero multiplicities are stored.
class CycleDistribution {
 public:
  CycleDistribution() = default;
  explicit CycleDistribution(std::map<int, int> multiplicities);

  const std::map<int, int>& multiplicities() const noexcept { return multiplicities_; }
  int n_total() const noexcept { return n_total_; }
  /// xi_s, zero when absent.
  int count(int s) const;

  bool operator==(const CycleDistribution&) const = default;

 private:
  std::map<int, int> multiplicities_;
  int n_total_ = 0;
};

/// Cycle sums C_1..C_smax of one system: V f_s for the continuum photon gas,
/// or sum_j g_j exp(-beta e_j s) for a discrete spectrum.
class CycleSumSequence {
 public:
  explicit CycleSumSequence(std::vector<double> values);

  static CycleSumSequence photon_continuum(const ThermoState& state, int s_max);

  /// C_s for 1 <= s <= size().
  double at(int s) const;
  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// ---------------------------------------------------------------------------
// Photon-gas log Z in its equivalent forms.

/// V T^3 / (3 pi^2) * int_0^inf p^3/(e^p - 1) dp.
double log_grand_partition_integral(const ThermoState& state);

enum class TailCorrection { none, bracketed };

struct CycleSeries {
  double value;         // partial_sum + midpoint of the tail bracket
  double partial_sum;   // V * sum_{s<=s_max} f_s / s
  double tail_lower;    // V (2/pi^2) T^3 / (3 (s_max+1)^3)
  double tail_upper;    // V (2/pi^2) T^3 / (3 s_max^3)
  int s_max;
};

/// V * sum_s f_s / s. With TailCorrection::bracketed the neglected
/// sum over s > s_max is bracketed by the integrals of s^-4 from s_max+1
/// and from s_max, and the midpoint is added.
CycleSeries log_grand_partition_cycle_series(const ThermoState& state, int s_max,
                                             TailCorrection tail = TailCorrection::bracketed);

/// Smallest s_max for which half the tail bracket is below rel_tol of the
/// full series.
int certified_cycle_cutoff(double rel_tol);

struct ProductFactor {
  int s;
  double log_factor;           // V f_s / s
  double log_factor_series;    // log of the explicitly summed sum_xi (V f_s/s)^xi / xi!
  double log_partial_product;  // sum_{k<=s} log_factor
};

/// Factors of the cycle-product form of Z for s = 1..s_max. Each factor is
/// the exponential series in (V f_s / s); it is summed term by term (in a
/// rescaled form that cannot overflow) and checked against the closed
/// exponential to 1e-13. Throws ErrorCode::invariant on mismatch.
std::vector<ProductFactor> grand_partition_product_form(const ThermoState& state, int s_max);

// ---------------------------------------------------------------------------
// Canonical (fixed-N) form.

/// Z_0..Z_n from Z_0 = 1, Z_N = (1/N) sum_{k=1}^{N} C_k Z_{N-k}.
std::vector<double> canonical_partition_table(const CycleSumSequence& cycles, int n);

double canonical_partition_recursive(const CycleSumSequence& cycles, int n);

struct EnumeratedTerm {
  CycleDistribution distribution;
  double weight;             // prod_s C_s^{xi_s} / (xi_s! s^{xi_s})
  uint128 permutation_count; // N! / prod_s (xi_s! s^{xi_s})
};

struct EnumeratedPartition {
  double total;
  std::vector<EnumeratedTerm> terms;
  uint128 permutation_count_sum;  // always N!
};

inline constexpr int kDefaultEnumerationLimit = 25;

/// Calls visit once per integer partition of n, in lexicographic order of
/// the ascending part sequences (1+1+...+1 first, n last).
void for_each_integer_partition(int n, const std::function<void(const CycleDistribution&)>& visit);

/// N! as an exact 128-bit integer, n <= 34.
uint128 factorial_u128(int n);

/// Number of permutations of n elements with the given cycle type.
uint128 permutation_count(const CycleDistribution& distribution);

/// Term-by-term evaluation of the canonical sum over all cycle types of N.
/// Throws ErrorCode::size for n > limit and ErrorCode::invariant if the
/// permutation counts fail to add up to N!.
EnumeratedPartition canonical_partition_enumerated(const CycleSumSequence& cycles, int n,
                                                   int limit = kDefaultEnumerationLimit);

// ---------------------------------------------------------------------------
// Massive bosons.

/// n = sum_s z^s f'_s = (m T / 2 pi)^{3/2} g_{3/2}(z).
double bose_number_density_cycle(const ThermoState& state, double mass);

/// Independent route: integral of 4 pi p^2 dp / (2pi)^3 times the
/// Bose-Einstein occupation z e^{-eps/T} / (1 - z e^{-eps/T}).
double bose_number_density_integral(const ThermoState& state, double mass);

std::string to_string(const uint128& value);

}  // namespace cyclegas
