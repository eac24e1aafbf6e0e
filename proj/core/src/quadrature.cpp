#include "cyclegas/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "cyclegas/errors.hpp"

namespace cyclegas {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol) {
  constexpr unsigned kMaxDepth = 24;
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, kMaxDepth, rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > rel_tol * l1) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge: estimate " << value
        << ", error " << error << ", L1 " << l1;
    throw Error(ErrorCode::convergence, msg.str());
  }
  return {value, error};
}

}  // namespace cyclegas
