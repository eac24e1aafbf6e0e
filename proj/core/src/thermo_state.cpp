#include "cyclegas/thermo_state.hpp"

#include <cmath>
#include <string>

#include "cyclegas/errors.hpp"

namespace cyclegas {

ThermoState::ThermoState(double temperature, double volume, double fugacity)
    : temperature_(temperature), volume_(volume), fugacity_(fugacity) {
  require(std::isfinite(temperature) && temperature > 0.0, ErrorCode::domain,
          "temperature must be positive, got " + std::to_string(temperature));
  require(std::isfinite(volume) && volume > 0.0, ErrorCode::domain,
          "volume must be positive, got " + std::to_string(volume));
  require(fugacity >= 0.0 && fugacity <= 1.0, ErrorCode::domain,
          "fugacity must lie in [0, 1], got " + std::to_string(fugacity));
}

void require_photon_gas(const ThermoState& state) {
  require(state.fugacity() == 1.0, ErrorCode::domain,
          "photon gas requires fugacity 1 (no conserved photon number)");
}

}  // namespace cyclegas
