#include "cyclegas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "cyclegas/errors.hpp"

namespace cyclegas {
namespace {

void require_beta(double beta) {
  require(std::isfinite(beta) && beta > 0.0, ErrorCode::domain, "beta must be positive and finite");
}

void require_fugacity(double z) {
  require(z >= 0.0 && z <= 1.0, ErrorCode::domain, "fugacity must lie in [0, 1]");
}

// Largest Boltzmann-weighted fugacity z e^{-beta e_min}.
double leading_ratio(const ModeSpectrum& spectrum, double z, double beta) {
  return z * std::exp(-beta * spectrum.min_energy());
}

// C_s, adding e^{-beta e s} once per degenerate state so a g-fold level and
// g separate equal levels produce the same floating-point sum.
double cycle_sum(const ModeSpectrum& spectrum, double beta, int s) {
  double c = 0.0;
  const auto& e = spectrum.energies();
  const auto& g = spectrum.degeneracies();
  for (std::size_t j = 0; j < e.size(); ++j) {
    const double x = std::exp(-beta * e[j] * s);
    for (int k = 0; k < g[j]; ++k) c += x;
  }
  return c;
}

}  // namespace

ModeSpectrum::ModeSpectrum(std::vector<double> energies, std::vector<int> degeneracies)
    : energies_(std::move(energies)), degeneracies_(std::move(degeneracies)) {
  require(!energies_.empty(), ErrorCode::domain, "mode spectrum must not be empty");
  require(energies_.size() == degeneracies_.size(), ErrorCode::domain,
          "energies and degeneracies differ in length");
  for (std::size_t j = 0; j < energies_.size(); ++j) {
    require(std::isfinite(energies_[j]) && energies_[j] >= 0.0, ErrorCode::domain,
            "mode energies must be finite and >= 0");
    require(degeneracies_[j] >= 1, ErrorCode::domain, "mode degeneracies must be >= 1");
    if (j > 0) {
      require(energies_[j - 1] <= energies_[j], ErrorCode::domain,
              "mode energies must be sorted ascending");
    }
  }
}

ModeSpectrum ModeSpectrum::nondegenerate(std::vector<double> energies) {
  std::vector<int> g(energies.size(), 1);
  return ModeSpectrum(std::move(energies), std::move(g));
}

int ModeSpectrum::state_count() const noexcept {
  return std::accumulate(degeneracies_.begin(), degeneracies_.end(), 0);
}

ModeSpectrum ModeSpectrum::expanded() const {
  std::vector<double> e;
  for (std::size_t j = 0; j < energies_.size(); ++j) e.insert(e.end(), degeneracies_[j], energies_[j]);
  return nondegenerate(std::move(e));
}

ModeSpectrum parse_mode_spectrum(std::istream& in) {
  std::vector<std::pair<double, int>> modes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    double energy = 0.0;
    int degeneracy = 0;
    if (!(fields >> energy)) {
      fields.clear();
      std::string rest;
      require(!(fields >> rest), ErrorCode::io,
              "line " + std::to_string(line_no) + ": expected \"energy degeneracy\"");
      continue;  // blank or comment-only
    }
    require(static_cast<bool>(fields >> degeneracy), ErrorCode::io,
            "line " + std::to_string(line_no) + ": missing integer degeneracy");
    std::string extra;
    require(!(fields >> extra), ErrorCode::io,
            "line " + std::to_string(line_no) + ": trailing field \"" + extra + "\"");
    require(energy >= 0.0 && degeneracy >= 1, ErrorCode::io,
            "line " + std::to_string(line_no) + ": need energy >= 0 and degeneracy >= 1");
    modes.emplace_back(energy, degeneracy);
  }
  require(!modes.empty(), ErrorCode::io, "mode spectrum file contains no modes");
  std::stable_sort(modes.begin(), modes.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> e;
  std::vector<int> g;
  for (const auto& [energy, degeneracy] : modes) {
    e.push_back(energy);
    g.push_back(degeneracy);
  }
  return ModeSpectrum(std::move(e), std::move(g));
}

ModeSpectrum load_mode_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open spectrum file " + path.string());
  return parse_mode_spectrum(in);
}

CycleSumSequence spectrum_cycle_sums(const ModeSpectrum& spectrum, double beta, int s_max) {
  require_beta(beta);
  require(s_max >= 0, ErrorCode::domain, "s_max must be >= 0");
  std::vector<double> c;
  c.reserve(s_max);
  for (int s = 1; s <= s_max; ++s) c.push_back(cycle_sum(spectrum, beta, s));
  return CycleSumSequence(std::move(c));
}

double grand_partition_product(const ModeSpectrum& spectrum, double z, double beta) {
  require_beta(beta);
  require_fugacity(z);
  require(leading_ratio(spectrum, z, beta) < 1.0, ErrorCode::divergence,
          "z exp(-beta e_min) >= 1: the ground mode occupation diverges");
  double product = 1.0;
  const auto& e = spectrum.energies();
  const auto& g = spectrum.degeneracies();
  for (std::size_t j = 0; j < e.size(); ++j) {
    const double factor = 1.0 / (1.0 - z * std::exp(-beta * e[j]));
    for (int k = 0; k < g[j]; ++k) product *= factor;
  }
  return product;
}

double grand_partition_cycle(const ModeSpectrum& spectrum, double z, double beta) {
  require_beta(beta);
  require_fugacity(z);
  const double q = leading_ratio(spectrum, z, beta);
  require(q <= 0.9, ErrorCode::convergence,
          "cycle expansion needs z exp(-beta e_min) <= 0.9, got " + std::to_string(q));
  if (z == 0.0) return 1.0;
  const double states = spectrum.state_count();
  double log_z = 0.0;
  for (int s = 1; s < 100'000; ++s) {
    log_z += std::pow(z, s) * cycle_sum(spectrum, beta, s) / s;
    // sum_{k>s} z^k C_k / k <= G q^{s+1} / ((s+1)(1-q))
    const double tail = states * std::pow(q, s + 1) / ((s + 1) * (1.0 - q));
    if (tail < 1e-13) return std::exp(log_z);
  }
  throw Error(ErrorCode::convergence, "cycle expansion did not reach its tail bound");
}

double grand_partition_cycle(const ModeSpectrum& spectrum, double z, double beta, int s_max) {
  require_beta(beta);
  require_fugacity(z);
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  double log_z = 0.0;
  for (int s = 1; s <= s_max; ++s) log_z += std::pow(z, s) * cycle_sum(spectrum, beta, s) / s;
  return std::exp(log_z);
}

long long occupation_vector_count(int n, int m) {
  require(n >= 0 && m >= 1, ErrorCode::domain, "need n >= 0 and m >= 1");
  // C(n + m - 1, n), saturating well above any enumeration limit.
  long double count = 1.0L;
  const int k = std::min(n, m - 1);
  for (int i = 1; i <= k; ++i) {
    count = count * (n + m - 1 - k + i) / i;
    if (count > 9.0e18L) return std::numeric_limits<long long>::max();
  }
  return std::llround(count);
}

double canonical_by_occupation(const ModeSpectrum& spectrum, int n, double beta) {
  require_beta(beta);
  require(n >= 0, ErrorCode::domain, "particle number must be >= 0");
  const std::vector<double> e = spectrum.expanded().energies();
  const int m = static_cast<int>(e.size());
  const long long count = occupation_vector_count(n, m);
  require(count <= kOccupationEnumerationLimit, ErrorCode::size,
          std::to_string(count) + " occupation vectors exceed the enumeration limit");

  double total = 0.0;
  // Fill modes in order; the last mode takes whatever is left.
  auto fill = [&](auto&& self, int mode, int remaining, double energy) -> void {
    if (mode == m - 1) {
      total += std::exp(-beta * (energy + remaining * e[mode]));
      return;
    }
    for (int k = 0; k <= remaining; ++k) self(self, mode + 1, remaining - k, energy + k * e[mode]);
  };
  fill(fill, 0, n, 0.0);
  return total;
}

double canonical_by_permutations(const ModeSpectrum& spectrum, int n, double beta) {
  require_beta(beta);
  require(n >= 0, ErrorCode::domain, "particle number must be >= 0");
  require(n <= 25, ErrorCode::size, "cycle-type summation is limited to N <= 25");
  if (n == 0) return 1.0;

  std::vector<double> c(n + 1, 0.0);
  for (int s = 1; s <= n; ++s) c[s] = cycle_sum(spectrum, beta, s);

  uint128 n_factorial = 1;
  for (int k = 2; k <= n; ++k) n_factorial *= static_cast<uint128>(k);

  // Parts generated in non-increasing order; mult[s] tracks xi_s.
  std::vector<int> mult(n + 1, 0);
  double total = 0.0;
  auto visit = [&] {
    uint128 denom = 1;
    double product = 1.0;
    for (int s = 1; s <= n; ++s) {
      for (int j = 1; j <= mult[s]; ++j) {
        denom *= static_cast<uint128>(s) * static_cast<uint128>(j);
        product *= c[s];
      }
    }
    total += static_cast<double>(n_factorial / denom) * product;
  };
  auto recurse = [&](auto&& self, int max_part, int remaining) -> void {
    if (remaining == 0) {
      visit();
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      ++mult[p];
      self(self, p, remaining - p);
      --mult[p];
    }
  };
  recurse(recurse, n, n);
  return total / static_cast<double>(n_factorial);
}

double canonical_by_explicit_permutations(const ModeSpectrum& spectrum, int n, double beta) {
  require_beta(beta);
  require(n >= 0, ErrorCode::domain, "particle number must be >= 0");
  require(n <= 10, ErrorCode::size, "explicit permutation summation is limited to N <= 10");
  if (n == 0) return 1.0;

  std::vector<double> c(n + 1, 0.0);
  for (int s = 1; s <= n; ++s) c[s] = cycle_sum(spectrum, beta, s);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(n);
  double total = 0.0;
  double n_factorial = 0.0;
  do {
    std::fill(seen.begin(), seen.end(), 0);
    double product = 1.0;
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      int length = 0;
      for (int i = start; !seen[i]; i = perm[i]) {
        seen[i] = 1;
        ++length;
      }
      product *= c[length];
    }
    total += product;
    n_factorial += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / n_factorial;
}

}  // namespace cyclegas
