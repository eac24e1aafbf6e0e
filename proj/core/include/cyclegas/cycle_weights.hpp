#pragma once

#include <vector>

#include "cyclegas/thermo_state.hpp"

namespace cyclegas {

/// Per-volume statistical weight of an s-cycle: s particles sharing one
/// momentum and polarization state.
struct CycleWeight {
  int s;
  double value;
};

enum class DispersionKind { photon, massive };

/// Single-particle dispersion. Photons: eps(p) = p, two helicity states.
/// Massive: eps(p) = p^2 / (2m), one internal state unless overridden.
struct Dispersion {
  DispersionKind kind = DispersionKind::photon;
  double mass = 0.0;
  int internal_degeneracy = 2;

  static Dispersion photon(int degeneracy = 2);
  static Dispersion massive(double mass, int degeneracy = 1);

  double energy(double p) const noexcept;
};

/// f_s = (2/pi^2) T^3 / s^3.
CycleWeight photon_cycle_weight(const ThermoState& state, int s);

/// f'_s = (m T / 2 pi)^{3/2} / s^{3/2}.
CycleWeight matter_cycle_weight(const ThermoState& state, double mass, int s);

/// Closed form for an arbitrary Dispersion, scaled by its internal degeneracy.
CycleWeight closed_form_cycle_weight(const Dispersion& dispersion, const ThermoState& state, int s);

/// g * integral of exp(-beta eps(p) s) 4 pi p^2 dp / (2 pi)^3, by quadrature.
///
/// The momentum is rescaled so that beta*eps*s is a fixed function of the
/// integration variable, which makes the integral itself s-independent.
/// Throws ErrorCode::convergence if the adaptive scheme misses 1e-9.
CycleWeight cycle_weight_by_quadrature(const Dispersion& dispersion, const ThermoState& state, int s);

struct DecayRow {
  int s;
  double photon_ratio;  // f_s / f_1
  double matter_ratio;  // f'_s / f'_1
};

/// Normalized decay curves for s = 1..s_max. Throws ErrorCode::invariant
/// if the photon curve fails to fall strictly below the matter curve for
/// some s >= 2, or if the log-log slopes deviate from -3 and -3/2.
std::vector<DecayRow> decay_comparison(int s_max);

}  // namespace cyclegas
