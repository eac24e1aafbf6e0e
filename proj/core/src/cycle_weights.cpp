#include "cyclegas/cycle_weights.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cyclegas/errors.hpp"
#include "cyclegas/quadrature.hpp"

namespace cyclegas {
namespace {

using std::numbers::pi;

void require_cycle_size(int s) {
  if (s < 1) throw Error(ErrorCode::domain, "cycle size must be >= 1, got " + std::to_string(s));
}

void require_mass(double mass) {
  require(std::isfinite(mass) && mass > 0.0, ErrorCode::domain,
          "mass must be positive, got " + std::to_string(mass));
}

}  // namespace

Dispersion Dispersion::photon(int degeneracy) {
  require(degeneracy >= 1, ErrorCode::domain, "internal degeneracy must be >= 1");
  return Dispersion{DispersionKind::photon, 0.0, degeneracy};
}

Dispersion Dispersion::massive(double mass, int degeneracy) {
  require_mass(mass);
  require(degeneracy >= 1, ErrorCode::domain, "internal degeneracy must be >= 1");
  return Dispersion{DispersionKind::massive, mass, degeneracy};
}

double Dispersion::energy(double p) const noexcept {
  return kind == DispersionKind::photon ? p : p * p / (2.0 * mass);
}

CycleWeight photon_cycle_weight(const ThermoState& state, int s) {
  require_cycle_size(s);
  const double t = state.temperature();
  const double sd = s;
  return {s, 2.0 / (pi * pi) * t * t * t / (sd * sd * sd)};
}

CycleWeight matter_cycle_weight(const ThermoState& state, double mass, int s) {
  require_cycle_size(s);
  require_mass(mass);
  const double scale = mass * state.temperature() / (2.0 * pi);
  return {s, std::pow(scale / s, 1.5)};
}

CycleWeight closed_form_cycle_weight(const Dispersion& dispersion, const ThermoState& state, int s) {
  if (dispersion.kind == DispersionKind::photon) {
    auto w = photon_cycle_weight(state, s);
    w.value *= dispersion.internal_degeneracy / 2.0;
    return w;
  }
  auto w = matter_cycle_weight(state, dispersion.mass, s);
  w.value *= dispersion.internal_degeneracy;
  return w;
}

CycleWeight cycle_weight_by_quadrature(const Dispersion& dispersion, const ThermoState& state, int s) {
  require_cycle_size(s);
  if (dispersion.kind == DispersionKind::massive) require_mass(dispersion.mass);

  // p = q * p_scale with beta * eps(p) * s = q (photon) or q^2 (massive).
  const double beta_s = state.beta() * s;
  const bool photon = dispersion.kind == DispersionKind::photon;
  const double p_scale = photon ? 1.0 / beta_s : std::sqrt(2.0 * dispersion.mass / beta_s);
  // exp(-q) < 1e-30 beyond q = 70; exp(-q^2) beyond q = 8.5.
  const double q_max = photon ? 80.0 : 9.0;

  const auto integral = integrate(
      [&](double q) {
        const double p = q * p_scale;
        return q * q * std::exp(-beta_s * dispersion.energy(p));
      },
      0.0, q_max, 1e-12);

  // g * 4 pi / (2 pi)^3 = g / (2 pi^2)
  const double value = dispersion.internal_degeneracy / (2.0 * pi * pi) * p_scale * p_scale *
                       p_scale * integral.value;
  return {s, value};
}

std::vector<DecayRow> decay_comparison(int s_max) {
  require(s_max >= 2, ErrorCode::domain, "decay_comparison requires s_max >= 2");
  const ThermoState unit(1.0);
  const double mass = 2.0 * pi;  // m T / 2 pi = 1
  const double f1 = photon_cycle_weight(unit, 1).value;
  const double g1 = matter_cycle_weight(unit, mass, 1).value;

  std::vector<DecayRow> rows;
  rows.reserve(s_max);
  for (int s = 1; s <= s_max; ++s) {
    DecayRow row{s, photon_cycle_weight(unit, s).value / f1,
                 matter_cycle_weight(unit, mass, s).value / g1};
    if (s >= 2) {
      require(row.photon_ratio < row.matter_ratio, ErrorCode::invariant,
              "photon weight does not decay faster at s = " + std::to_string(s));
      const DecayRow& prev = rows.back();
      const double dlog_s = std::log(static_cast<double>(s) / (s - 1));
      const double photon_slope = std::log(row.photon_ratio / prev.photon_ratio) / dlog_s;
      const double matter_slope = std::log(row.matter_ratio / prev.matter_ratio) / dlog_s;
      require(std::abs(photon_slope + 3.0) < 1e-9 && std::abs(matter_slope + 1.5) < 1e-9,
              ErrorCode::invariant, "log-log slopes deviate at s = " + std::to_string(s));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cyclegas
