#pragma once

#include <functional>

namespace cyclegas {

struct QuadratureResult {
  double value;
  double error_estimate;
};

/// Adaptive Gauss-Kronrod quadrature of f over the finite interval [a, b].
/// Throws ErrorCode::convergence if the error estimate stays above
/// rel_tol relative to the L1 norm of the integrand.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-13);

}  // namespace cyclegas
