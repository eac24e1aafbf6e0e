#pragma once

namespace cyclegas {

/// Riemann zeta function for real r > 1.
///
/// Sums s^-r directly up to a cutoff S and adds the Euler-Maclaurin tail
/// (integral of x^-r from S to infinity plus Bernoulli corrections). The
/// first omitted correction bounds the remainder; S grows until that bound
/// is below 1e-13 of the result. Throws ErrorCode::domain for r <= 1 + 1e-9.
double riemann_zeta(double r);

/// Bose-Einstein function g_r(z) = sum_{s>=1} z^s / s^r for 0 <= z <= 1.
///
/// For z < 1 the series is summed until the geometric tail bound
/// term_{S+1} / (1 - z) drops below 1e-13 of the partial sum; z == 1 is
/// delegated to riemann_zeta. The cost grows like 1/(1 - z), so fugacities
/// within ~1e-7 of 1 raise ErrorCode::convergence.
double polylog(double r, double z);

/// Integral of x^n / (e^x - 1) over [0, inf).
///
/// Evaluated twice: by quadrature (bose_integral_quadrature) and as
/// Gamma(n+1) * zeta(n+1). Throws ErrorCode::invariant if the two disagree
/// beyond 1e-10 relative; returns the closed form.
double bose_integral(int n);

/// Quadrature route of bose_integral: a power series below x = 1e-3,
/// adaptive Gauss-Kronrod on [1e-3, 40] and the exact sum over e^{-kx}
/// of the tail beyond 40.
double bose_integral_quadrature(int n);

}  // namespace cyclegas
