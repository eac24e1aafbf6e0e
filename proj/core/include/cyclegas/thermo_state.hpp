#pragma once

namespace cyclegas {

/// Ensemble parameters in natural units (hbar = c = k_B = 1).
///
/// Temperature is an energy, volume is a length cubed and the fugacity
/// z = exp(mu/T) is capped at 1. Photon-gas computations additionally
/// require z == 1 (see require_photon_gas).
class ThermoState {
 public:
  explicit ThermoState(double temperature, double volume = 1.0, double fugacity = 1.0);

  double temperature() const noexcept { return temperature_; }
  double volume() const noexcept { return volume_; }
  double fugacity() const noexcept { return fugacity_; }
  double beta() const noexcept { return 1.0 / temperature_; }

  ThermoState with_temperature(double t) const { return ThermoState(t, volume_, fugacity_); }
  ThermoState with_volume(double v) const { return ThermoState(temperature_, v, fugacity_); }
  ThermoState with_fugacity(double z) const { return ThermoState(temperature_, volume_, z); }

  bool operator==(const ThermoState&) const = default;

 private:
  double temperature_;
  double volume_;
  double fugacity_;
};

/// Throws ErrorCode::domain unless the fugacity is exactly 1. Photons carry
/// no conserved number, so a chemical potential is meaningless for them.
void require_photon_gas(const ThermoState& state);

}  // namespace cyclegas
