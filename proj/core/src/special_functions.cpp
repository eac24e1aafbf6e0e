#include "cyclegas/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "cyclegas/errors.hpp"
#include "cyclegas/quadrature.hpp"

namespace cyclegas {
namespace {

constexpr double kSeriesTolerance = 1e-13;

// B_2, B_4, ..., B_20.
constexpr std::array<double, 10> kBernoulliEven = {
    1.0 / 6.0,     -1.0 / 30.0,        1.0 / 42.0,       -1.0 / 30.0,    5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,        -3617.0 / 510.0,  43867.0 / 798.0, -174611.0 / 330.0,
};

struct ZetaEstimate {
  double value;
  double remainder_bound;
};

// Direct sum over s < cutoff, Euler-Maclaurin for the rest. For x^-r every
// derivative is completely monotone, so the remainder after the last used
// Bernoulli correction is bounded by the first omitted one.
ZetaEstimate zeta_euler_maclaurin(double r, int cutoff) {
  double partial = 0.0;
  for (int s = cutoff - 1; s >= 1; --s) partial += std::pow(static_cast<double>(s), -r);

  const double n = cutoff;
  double tail = std::pow(n, 1.0 - r) / (r - 1.0) + 0.5 * std::pow(n, -r);

  // term_k = B_2k / (2k)! * (r)_{2k-1} * n^{1-r-2k}
  double rising = r;                // (r)_{2k-1}
  double factorial = 2.0;           // (2k)!
  double power = std::pow(n, -r - 1.0);
  double bound = 0.0;
  const std::size_t used = kBernoulliEven.size() - 1;
  for (std::size_t k = 0; k < kBernoulliEven.size(); ++k) {
    const double term = kBernoulliEven[k] / factorial * rising * power;
    if (k == used) {
      bound = std::abs(term);
      break;
    }
    tail += term;
    const double m = 2.0 * static_cast<double>(k + 1);  // 2k for the next k
    rising *= (r + m - 1.0) * (r + m);
    factorial *= (m + 1.0) * (m + 2.0);
    power /= n * n;
  }
  return {partial + tail, bound};
}

}  // namespace

double riemann_zeta(double r) {
  require(r > 1.0 + 1e-9, ErrorCode::domain,
          "riemann_zeta requires r > 1, got " + std::to_string(r));
  for (int cutoff = 10; cutoff <= (1 << 20); cutoff *= 2) {
    const ZetaEstimate est = zeta_euler_maclaurin(r, cutoff);
    if (est.remainder_bound <= kSeriesTolerance * est.value) return est.value;
  }
  throw Error(ErrorCode::convergence, "riemann_zeta: tail bound not reached");
}

double polylog(double r, double z) {
  require(z >= 0.0 && z <= 1.0, ErrorCode::domain,
          "polylog requires 0 <= z <= 1, got " + std::to_string(z));
  if (z == 0.0) return 0.0;
  if (z == 1.0) {
    require(r > 1.0, ErrorCode::domain, "polylog(r, 1) diverges for r <= 1");
    return riemann_zeta(r);
  }

  constexpr long long kMaxTerms = 100'000'000;
  const double log_z = std::log(z);
  // z^S < 1e-16 needs S ~ 37 / |log z|; refuse work that cannot finish promptly.
  require(37.0 / -log_z < static_cast<double>(kMaxTerms), ErrorCode::convergence,
          "polylog: fugacity too close to 1 for direct summation");

  // Neumaier-compensated forward sum. z^s is resynchronized with pow every
  // 64 terms to keep the running product from drifting.
  double sum = 0.0;
  double compensation = 0.0;
  double z_pow = 1.0;
  for (long long s = 1; s <= kMaxTerms; ++s) {
    z_pow = (s % 64 == 0) ? std::exp(static_cast<double>(s) * log_z) : z_pow * z;
    const double term = z_pow * std::pow(static_cast<double>(s), -r);
    const double t = sum + term;
    compensation += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    // Every later term ratio is z (k/(k+1))^r <= q, so the rest is below term q/(1-q).
    const double q = r >= 0.0 ? z : z * std::pow((s + 1.0) / s, -r);
    if (q >= 1.0) continue;
    const double tail_bound = term * q / (1.0 - q);
    if (tail_bound <= kSeriesTolerance * (sum + compensation)) return sum + compensation;
  }
  throw Error(ErrorCode::convergence, "polylog: series did not converge");
}

double bose_integral_quadrature(int n) {
  require(n >= 1, ErrorCode::domain, "bose_integral requires n >= 1");
  constexpr double kSmall = 1e-3;
  constexpr double kLarge = 40.0;
  const double nd = n;

  // x^n/(e^x - 1) = x^{n-1} (1 - x/2 + x^2/12 - x^4/720 + x^6/30240 - ...)
  const double head = std::pow(kSmall, nd) / nd - std::pow(kSmall, nd + 1.0) / (2.0 * (nd + 1.0)) +
                      std::pow(kSmall, nd + 2.0) / (12.0 * (nd + 2.0)) -
                      std::pow(kSmall, nd + 4.0) / (720.0 * (nd + 4.0)) +
                      std::pow(kSmall, nd + 6.0) / (30240.0 * (nd + 6.0));

  const auto body = integrate(
      [n](double x) { return std::pow(x, n) / std::expm1(x); }, kSmall, kLarge, 1e-14);

  // 1/(e^x - 1) = sum_k e^{-kx}, and
  // int_X^inf x^n e^{-kx} dx = e^{-kX} sum_{j=0}^{n} n!/j! X^j / k^{n-j+1}.
  double tail = 0.0;
  for (int k = 1; k < 64; ++k) {
    const double kd = k;
    double inner = 0.0;
    double coeff = 1.0;  // n!/j! X^j, built from j = n downward
    for (int j = n; j >= 0; --j) {
      inner += coeff * std::pow(kLarge, j) / std::pow(kd, nd - j + 1.0);
      coeff *= j;
    }
    const double term = std::exp(-kd * kLarge) * inner;
    tail += term;
    if (term < 1e-18 * tail) break;
  }
  return head + body.value + tail;
}

double bose_integral(int n) {
  const double quadrature = bose_integral_quadrature(n);
  const double closed = std::tgamma(n + 1.0) * riemann_zeta(n + 1.0);
  require(std::abs(quadrature - closed) <= 1e-10 * closed, ErrorCode::invariant,
          "bose_integral: quadrature " + std::to_string(quadrature) + " disagrees with Gamma*zeta " +
              std::to_string(closed));
  return closed;
}

}  // namespace cyclegas
