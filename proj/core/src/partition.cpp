#include "cyclegas/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclegas/cycle_weights.hpp"
#include "cyclegas/errors.hpp"
#include "cyclegas/quadrature.hpp"
#include "cyclegas/special_functions.hpp"

namespace cyclegas {
namespace {

using std::numbers::pi;

// (2/pi^2) T^3 V, the s-independent part of V f_s s^3.
double photon_weight_prefactor(const ThermoState& state) {
  const double t = state.temperature();
  return 2.0 / (pi * pi) * t * t * t * state.volume();
}

// sum_{s=1}^{s_max} s^-p, smallest terms first.
double power_sum(int s_max, double p) {
  double sum = 0.0;
  for (int s = s_max; s >= 1; --s) sum += std::pow(static_cast<double>(s), -p);
  return sum;
}

// log of sum_k x^k / k! computed as x + log(sum of Poisson(x) probabilities),
// walking outward from the mode so nothing overflows.
double log_exponential_series(double x) {
  if (x == 0.0) return 0.0;
  const double mode = std::floor(x);
  const double p_mode = std::exp(mode * std::log(x) - std::lgamma(mode + 1.0) - x);
  double sum = p_mode;
  double p = p_mode;
  for (double k = mode + 1.0;; k += 1.0) {
    p *= x / k;
    sum += p;
    if (p < 1e-17 * sum) break;
  }
  p = p_mode;
  for (double k = mode; k >= 1.0; k -= 1.0) {
    p *= k / x;
    sum += p;
    if (p < 1e-17 * sum) break;
  }
  return x + std::log(sum);
}

}  // namespace

// ---------------------------------------------------------------------------

CycleDistribution::CycleDistribution(std::map<int, int> multiplicities) {
  for (const auto& [s, xi] : multiplicities) {
    require(s >= 1, ErrorCode::domain, "cycle length must be >= 1");
    require(xi >= 0, ErrorCode::domain, "cycle multiplicity must be >= 0");
    if (xi == 0) continue;
    multiplicities_.emplace(s, xi);
    n_total_ += s * xi;
  }
}

int CycleDistribution::count(int s) const {
  const auto it = multiplicities_.find(s);
  return it == multiplicities_.end() ? 0 : it->second;
}

CycleSumSequence::CycleSumSequence(std::vector<double> values) : values_(std::move(values)) {
  for (double c : values_) {
    // Discrete spectra may underflow to exactly zero at large beta*e*s.
    require(std::isfinite(c) && c >= 0.0, ErrorCode::domain,
            "cycle sums must be finite and non-negative");
  }
}

CycleSumSequence CycleSumSequence::photon_continuum(const ThermoState& state, int s_max) {
  require_photon_gas(state);
  require(s_max >= 0, ErrorCode::domain, "s_max must be >= 0");
  std::vector<double> values;
  values.reserve(s_max);
  for (int s = 1; s <= s_max; ++s) values.push_back(state.volume() * photon_cycle_weight(state, s).value);
  return CycleSumSequence(std::move(values));
}

double CycleSumSequence::at(int s) const {
  if (s < 1 || s > size()) throw Error(ErrorCode::domain, "cycle sum C_" + std::to_string(s) + " is not defined");
  return values_[s - 1];
}

// ---------------------------------------------------------------------------

double log_grand_partition_integral(const ThermoState& state) {
  require_photon_gas(state);
  const double t = state.temperature();
  return state.volume() * t * t * t / (3.0 * pi * pi) * bose_integral(3);
}

CycleSeries log_grand_partition_cycle_series(const ThermoState& state, int s_max, TailCorrection tail) {
  require_photon_gas(state);
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  const double prefactor = photon_weight_prefactor(state);
  const double n = s_max;

  CycleSeries out{};
  out.s_max = s_max;
  out.partial_sum = prefactor * power_sum(s_max, 4.0);
  out.tail_lower = prefactor / (3.0 * (n + 1.0) * (n + 1.0) * (n + 1.0));
  out.tail_upper = prefactor / (3.0 * n * n * n);
  out.value = out.partial_sum;
  if (tail == TailCorrection::bracketed) out.value += 0.5 * (out.tail_lower + out.tail_upper);
  return out;
}

int certified_cycle_cutoff(double rel_tol) {
  require(rel_tol > 0.0, ErrorCode::domain, "tolerance must be positive");
  const double zeta4 = std::pow(pi, 4) / 90.0;
  for (int s = 1; s < 1'000'000; ++s) {
    const double n = s;
    const double half_width = 0.5 * (1.0 / (3.0 * n * n * n) - 1.0 / (3.0 * (n + 1) * (n + 1) * (n + 1)));
    if (half_width <= rel_tol * zeta4) return s;
  }
  throw Error(ErrorCode::convergence, "no cutoff below 1e6 meets the tolerance");
}

std::vector<ProductFactor> grand_partition_product_form(const ThermoState& state, int s_max) {
  require_photon_gas(state);
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  std::vector<ProductFactor> factors;
  factors.reserve(s_max);
  double running = 0.0;
  for (int s = 1; s <= s_max; ++s) {
    const double x = state.volume() * photon_cycle_weight(state, s).value / s;
    const double series = log_exponential_series(x);
    require(std::abs(series - x) <= 1e-12 * std::max(1.0, x), ErrorCode::invariant,
            "exponential series of factor s = " + std::to_string(s) + " disagrees with exp");
    running += x;
    factors.push_back({s, x, series, running});
  }
  return factors;
}

// ---------------------------------------------------------------------------

std::vector<double> canonical_partition_table(const CycleSumSequence& cycles, int n) {
  require(n >= 0, ErrorCode::domain, "particle number must be >= 0");
  require(cycles.size() >= n, ErrorCode::domain, "cycle sums must be given for s = 1..N");
  const auto c = cycles.values();
  std::vector<double> z(n + 1, 0.0);
  z[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += c[k - 1] * z[m - k];
    z[m] = acc / m;
  }
  return z;
}

double canonical_partition_recursive(const CycleSumSequence& cycles, int n) {
  return canonical_partition_table(cycles, n).back();
}

void for_each_integer_partition(int n, const std::function<void(const CycleDistribution&)>& visit) {
  require(n >= 0, ErrorCode::domain, "cannot partition a negative integer");
  std::vector<int> parts;
  parts.reserve(n);
  auto emit = [&] {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    visit(CycleDistribution(std::move(mult)));
  };
  // Ascending parts: each next part is >= the previous one.
  auto recurse = [&](auto&& self, int min_part, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      if (remaining - p != 0 && remaining - p < p) continue;
      parts.push_back(p);
      self(self, p, remaining - p);
      parts.pop_back();
    }
  };
  recurse(recurse, 1, n);
}

uint128 factorial_u128(int n) {
  require(n >= 0 && n <= 34, ErrorCode::size, "factorial_u128 supports 0 <= n <= 34");
  uint128 f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<uint128>(k);
  return f;
}

uint128 permutation_count(const CycleDistribution& distribution) {
  uint128 denom = 1;
  for (const auto& [s, xi] : distribution.multiplicities()) {
    for (int j = 0; j < xi; ++j) denom *= static_cast<uint128>(s);
    denom *= factorial_u128(xi);
  }
  return factorial_u128(distribution.n_total()) / denom;
}

EnumeratedPartition canonical_partition_enumerated(const CycleSumSequence& cycles, int n, int limit) {
  require(n >= 0, ErrorCode::domain, "particle number must be >= 0");
  require(n <= limit, ErrorCode::size,
          "enumeration of N = " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  require(cycles.size() >= n, ErrorCode::domain, "cycle sums must be given for s = 1..N");

  EnumeratedPartition out{0.0, {}, 0};
  for_each_integer_partition(n, [&](const CycleDistribution& d) {
    double weight = 1.0;
    for (const auto& [s, xi] : d.multiplicities()) {
      weight *= std::pow(cycles.at(s) / s, xi) / std::tgamma(xi + 1.0);
    }
    const uint128 count = permutation_count(d);
    out.total += weight;
    out.permutation_count_sum += count;
    out.terms.push_back({d, weight, count});
  });
  require(out.permutation_count_sum == factorial_u128(n), ErrorCode::invariant,
          "cycle-type counts do not add up to N!");
  return out;
}

// ---------------------------------------------------------------------------

double bose_number_density_cycle(const ThermoState& state, double mass) {
  require(std::isfinite(mass) && mass > 0.0, ErrorCode::domain, "mass must be positive");
  const double scale = mass * state.temperature() / (2.0 * pi);
  return std::pow(scale, 1.5) * polylog(1.5, state.fugacity());
}

double bose_number_density_integral(const ThermoState& state, double mass) {
  require(std::isfinite(mass) && mass > 0.0, ErrorCode::domain, "mass must be positive");
  const double z = state.fugacity();
  if (z == 0.0) return 0.0;
  // p = q sqrt(2 m T): occupation z / (e^{q^2} - z), written with expm1 so
  // that z = 1 stays accurate near q = 0.
  const double gap = 1.0 - z;
  const auto integral = integrate(
      [z, gap](double q) {
        const double q2 = q * q;
        if (q2 == 0.0) return gap == 0.0 ? z : 0.0;
        return q2 * z / (std::expm1(q2) + gap);
      },
      0.0, 9.0, 1e-13);
  const double p_scale = std::sqrt(2.0 * mass * state.temperature());
  return p_scale * p_scale * p_scale / (2.0 * pi * pi) * integral.value;
}

std::string to_string(const uint128& value) {
  if (value == 0) return "0";
  std::string digits;
  uint128 v = value;
  while (v > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace cyclegas
