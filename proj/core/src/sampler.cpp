#include "cyclegas/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <json.hpp>
#include <sstream>
#include <string>
#include <thread>

#include "cyclegas/cycle_weights.hpp"
#include "cyclegas/errors.hpp"

namespace cyclegas {
namespace {

using std::numbers::pi;

constexpr int kChunkSize = 512;

struct ChunkResult {
  std::vector<std::uint64_t> photons;  // index s-1
  std::vector<std::uint64_t> cycles;
  std::vector<double> energy_sum;
  std::vector<double> energy_sq_sum;
};

struct Moments {
  double mean;
  double variance;  // unbiased
  double central4;  // biased fourth central moment
  double central2;  // biased second central moment
};

Moments moments(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  const double variance = x.size() > 1 ? m2 / (n - 1.0) : 0.0;
  return {mean, variance, m4 / n, m2 / n};
}

Estimate mean_estimate(const Moments& m, std::size_t n) {
  return {m.mean, n > 1 ? std::sqrt(m.variance / static_cast<double>(n)) : 0.0};
}

// Standard error of the sample variance from the fourth central moment.
Estimate variance_estimate(const Moments& m, std::size_t n) {
  const double spread = m.central4 - m.central2 * m.central2;
  return {m.variance, n > 1 ? std::sqrt(std::max(spread, 0.0) / static_cast<double>(n)) : 0.0};
}

double round9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round9(x);
}

}  // namespace

void SampleConfig::validate() const {
  require(replicas >= 1, ErrorCode::domain, "replicas must be >= 1");
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  require(threads >= 0, ErrorCode::domain, "threads must be >= 0");
  require_photon_gas(state);
}

std::vector<double> cycle_poisson_means(const ThermoState& state, int s_max) {
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  std::vector<double> means;
  means.reserve(s_max);
  for (int s = 1; s <= s_max; ++s) means.push_back(state.volume() * photon_cycle_weight(state, s).value / s);
  return means;
}

double cycle_truncation_tail(const ThermoState& state, int s_max) {
  require(s_max >= 1, ErrorCode::domain, "s_max must be >= 1");
  const double t = state.temperature();
  const double n = s_max;
  const double lower = 1.0 / (3.0 * (n + 1.0) * (n + 1.0) * (n + 1.0));
  const double upper = 1.0 / (3.0 * n * n * n);
  return state.volume() * 2.0 / (pi * pi) * t * t * t * 0.5 * (lower + upper);
}

std::uint64_t sample_poisson(double mean, SplitMix64& rng) {
  require(std::isfinite(mean) && mean >= 0.0, ErrorCode::domain, "Poisson mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = rng.uniform_open();
    while (p > limit) {
      ++k;
      p *= rng.uniform_open();
    }
    return k;
  }
  // Hormann's transformed rejection with squeeze (PTRS).
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform_open() - 0.5;
    const double v = rng.uniform_open();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

CycleDistribution sample_cycle_counts(std::span<const double> means, std::uint64_t seed,
                                      std::uint64_t replica) {
  std::map<int, int> counts;
  for (std::size_t i = 0; i < means.size(); ++i) {
    const int s = static_cast<int>(i) + 1;
    SplitMix64 rng = cycle_stream(seed, replica, s);
    counts[s] = static_cast<int>(sample_poisson(means[i], rng));
  }
  return CycleDistribution(std::move(counts));
}

CycleDistribution sample_cycle_configuration(const SampleConfig& config, std::uint64_t replica) {
  config.validate();
  const auto means = cycle_poisson_means(config.state, config.s_max);
  return sample_cycle_counts(means, config.seed, replica);
}

double sample_cycle_energy(int s, const ThermoState& state, SplitMix64& rng) {
  require(s >= 1, ErrorCode::domain, "cycle size must be >= 1");
  // p ~ Gamma(3, rate beta s) as a sum of three exponentials; E = s p.
  const double sum_logs =
      std::log(rng.uniform_open()) + std::log(rng.uniform_open()) + std::log(rng.uniform_open());
  const double momentum = -sum_logs / (state.beta() * s);
  return s * momentum;
}

SampleReport estimate_observables(const SampleConfig& config) {
  config.validate();
  const auto means = cycle_poisson_means(config.state, config.s_max);
  const int s_max = config.s_max;
  const std::size_t replicas = static_cast<std::size_t>(config.replicas);
  const std::size_t n_chunks = (replicas + kChunkSize - 1) / kChunkSize;

  std::vector<double> energy(replicas);
  std::vector<double> photons(replicas);
  std::vector<ChunkResult> chunks(n_chunks);

  auto run_chunk = [&](std::size_t c) {
    ChunkResult& out = chunks[c];
    out.photons.assign(s_max, 0);
    out.cycles.assign(s_max, 0);
    out.energy_sum.assign(s_max, 0.0);
    out.energy_sq_sum.assign(s_max, 0.0);
    const std::size_t end = std::min(replicas, (c + 1) * kChunkSize);
    for (std::size_t r = c * kChunkSize; r < end; ++r) {
      double e_total = 0.0;
      double n_total = 0.0;
      for (int s = 1; s <= s_max; ++s) {
        SplitMix64 rng = cycle_stream(config.seed, r, s);
        const std::uint64_t xi = sample_poisson(means[s - 1], rng);
        for (std::uint64_t k = 0; k < xi; ++k) {
          const double e = sample_cycle_energy(s, config.state, rng);
          e_total += e;
          out.energy_sum[s - 1] += e;
          out.energy_sq_sum[s - 1] += e * e;
        }
        out.cycles[s - 1] += xi;
        out.photons[s - 1] += xi * static_cast<std::uint64_t>(s);
        n_total += static_cast<double>(xi) * s;
      }
      energy[r] = e_total;
      photons[r] = n_total;
    }
  };

  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < n_chunks; c = next++) run_chunk(c);
      });
    }
  }

  // Reduction in chunk order keeps the result independent of scheduling.
  std::vector<std::uint64_t> hist(s_max, 0);
  std::vector<std::uint64_t> cycles(s_max, 0);
  std::vector<double> e_sum(s_max, 0.0);
  std::vector<double> e_sq(s_max, 0.0);
  for (const ChunkResult& c : chunks) {
    for (int i = 0; i < s_max; ++i) {
      hist[i] += c.photons[i];
      cycles[i] += c.cycles[i];
      e_sum[i] += c.energy_sum[i];
      e_sq[i] += c.energy_sq_sum[i];
    }
  }

  SampleReport report;
  report.config = config;
  report.n_replicas = config.replicas;
  report.truncation_tail = cycle_truncation_tail(config.state, s_max);
  for (int i = 0; i < s_max; ++i) report.histogram[i + 1] = hist[i];

  const Moments em = moments(energy);
  const Moments nm = moments(photons);
  report.estimates["energy"] = mean_estimate(em, replicas);
  report.estimates["photon_number"] = mean_estimate(nm, replicas);
  report.estimates["energy_variance"] = variance_estimate(em, replicas);
  report.estimates["photon_number_variance"] = variance_estimate(nm, replicas);

  auto cycle_estimate = [](double sum, double sq, double count) {
    const double mean = sum / count;
    const double var = (sq - count * mean * mean) / (count - 1.0);
    return Estimate{mean, std::sqrt(std::max(var, 0.0) / count)};
  };
  double all_sum = 0.0;
  double all_sq = 0.0;
  double all_count = 0.0;
  for (int i = 0; i < s_max; ++i) {
    all_sum += e_sum[i];
    all_sq += e_sq[i];
    all_count += static_cast<double>(cycles[i]);
    if (cycles[i] >= 2) {
      report.estimates["cycle_energy_s" + std::to_string(i + 1)] =
          cycle_estimate(e_sum[i], e_sq[i], static_cast<double>(cycles[i]));
    }
  }
  if (all_count >= 2.0) report.estimates["mean_cycle_energy"] = cycle_estimate(all_sum, all_sq, all_count);
  return report;
}

std::string to_json(const SampleReport& report) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json estimates = nlohmann::ordered_json::object();
  for (const auto& [name, est] : report.estimates) {
    estimates[name] = {{"mean", number(est.mean)}, {"se", number(est.se)}};
  }
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [s, count] : report.histogram) histogram[std::to_string(s)] = count;

  const SampleConfig& c = report.config;
  doc["estimates"] = std::move(estimates);
  doc["histogram"] = std::move(histogram);
  doc["config"] = {
      {"seed", c.seed},
      {"replicas", c.replicas},
      {"s_max", c.s_max},
      {"temperature", number(c.state.temperature())},
      {"volume", number(c.state.volume())},
      {"fugacity", number(c.state.fugacity())},
      {"truncation_tail", number(report.truncation_tail)},
  };
  return doc.dump(2) + "\n";
}

std::string histogram_csv(const SampleReport& report) {
  std::ostringstream out;
  out << "s,photon_count\n";
  for (const auto& [s, count] : report.histogram) out << s << ',' << count << '\n';
  return out.str();
}

}  // namespace cyclegas
