#include "cyclegas/units.hpp"

namespace cyclegas {

UnitsPolicy UnitsPolicy::natural() { return UnitsPolicy(UnitSystem::natural, 1.0, 1.0, 1.0); }

UnitsPolicy UnitsPolicy::si() {
  return UnitsPolicy(UnitSystem::si, si_constants::hbar, si_constants::c, si_constants::k_B);
}

// k_B * 1 K in SI; 1 in natural mode.
double UnitsPolicy::energy_unit() const noexcept { return k_B_; }
double UnitsPolicy::length_unit() const noexcept { return hbar_ * c_ / energy_unit(); }
double UnitsPolicy::time_unit() const noexcept { return hbar_ / energy_unit(); }
double UnitsPolicy::mass_unit() const noexcept { return energy_unit() / (c_ * c_); }

double UnitsPolicy::temperature_to_natural(double t) const noexcept { return t * k_B_ / energy_unit(); }
double UnitsPolicy::temperature_from_natural(double t) const noexcept { return t * energy_unit() / k_B_; }

double UnitsPolicy::volume_to_natural(double v) const noexcept {
  const double l = length_unit();
  return v / (l * l * l);
}
double UnitsPolicy::volume_from_natural(double v) const noexcept {
  const double l = length_unit();
  return v * (l * l * l);
}

double UnitsPolicy::frequency_to_natural(double nu) const noexcept { return nu * time_unit(); }
double UnitsPolicy::frequency_from_natural(double nu) const noexcept { return nu / time_unit(); }

double UnitsPolicy::mass_to_natural(double m) const noexcept { return m / mass_unit(); }
double UnitsPolicy::mass_from_natural(double m) const noexcept { return m * mass_unit(); }

double UnitsPolicy::energy_to_natural(double e) const noexcept { return e / energy_unit(); }
double UnitsPolicy::energy_from_natural(double e) const noexcept { return e * energy_unit(); }

double UnitsPolicy::number_density_from_natural(double n) const noexcept {
  return n / volume_from_natural(1.0);
}

double UnitsPolicy::energy_density_from_natural(double u) const noexcept {
  return u * energy_unit() / volume_from_natural(1.0);
}

double UnitsPolicy::spectral_density_from_natural(double u) const noexcept {
  return energy_density_from_natural(u) * time_unit();
}

ThermoState UnitsPolicy::to_natural(const ThermoState& state) const {
  return ThermoState(temperature_to_natural(state.temperature()), volume_to_natural(state.volume()),
                     state.fugacity());
}

ThermoState UnitsPolicy::from_natural(const ThermoState& state) const {
  return ThermoState(temperature_from_natural(state.temperature()),
                     volume_from_natural(state.volume()), state.fugacity());
}

}  // namespace cyclegas
