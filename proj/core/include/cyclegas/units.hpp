#pragma once

#include "cyclegas/thermo_state.hpp"

namespace cyclegas {

enum class UnitSystem { natural, si };

/// Conversion layer between the internal natural units and SI.
///
/// Internally hbar = c = k_B = 1 and the unit of energy is k_B * 1 K, so a
/// natural temperature is numerically equal to the temperature in kelvin.
/// Lengths are then measured in hbar*c/(k_B * 1 K) and times in
/// hbar/(k_B * 1 K). In natural mode every conversion is the identity.
class UnitsPolicy {
 public:
  static UnitsPolicy natural();
  static UnitsPolicy si();

  UnitSystem mode() const noexcept { return mode_; }
  double hbar() const noexcept { return hbar_; }
  double c() const noexcept { return c_; }
  double k_B() const noexcept { return k_B_; }

  // SI size of one natural unit (all 1 in natural mode).
  double energy_unit() const noexcept;  // J
  double length_unit() const noexcept;  // m
  double time_unit() const noexcept;    // s
  double mass_unit() const noexcept;    // kg

  double temperature_to_natural(double t) const noexcept;
  double temperature_from_natural(double t) const noexcept;
  double volume_to_natural(double v) const noexcept;
  double volume_from_natural(double v) const noexcept;
  double frequency_to_natural(double nu) const noexcept;
  double frequency_from_natural(double nu) const noexcept;
  double mass_to_natural(double m) const noexcept;
  double mass_from_natural(double m) const noexcept;
  double energy_from_natural(double e) const noexcept;
  double energy_to_natural(double e) const noexcept;
  double number_density_from_natural(double n) const noexcept;
  double energy_density_from_natural(double u) const noexcept;
  /// Spectral energy density u(nu): energy per volume per frequency.
  double spectral_density_from_natural(double u) const noexcept;

  /// State given in this policy's units -> natural units.
  ThermoState to_natural(const ThermoState& state) const;
  /// Natural-unit state -> this policy's units.
  ThermoState from_natural(const ThermoState& state) const;

 private:
  UnitsPolicy(UnitSystem mode, double hbar, double c, double k_B)
      : mode_(mode), hbar_(hbar), c_(c), k_B_(k_B) {}

  UnitSystem mode_;
  double hbar_;
  double c_;
  double k_B_;
};

namespace si_constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 299792458.0;         // m / s
inline constexpr double k_B = 1.380649e-23;      // J / K
}  // namespace si_constants

}  // namespace cyclegas
