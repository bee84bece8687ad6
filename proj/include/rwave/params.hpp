#pragma once

#include <cmath>
#include <stdexcept>

namespace rwave {

// Model parameters of the radial semilinear wave equation
//   u_tt = u_rr + (N-1)/r u_r + |u|^{p-1} u,   u_r(0,t) = 0.
// The exponent is conformal-subcritical: p > 1, and p <= 1 + 4/(N-1) for N >= 2.
struct Params {
  double p = 3.0;
  int N = 3;

  void validate() const {
    if (!(p > 1.0)) throw std::invalid_argument("Params: p must be > 1");
    if (N < 1) throw std::invalid_argument("Params: N must be >= 1");
    if (N >= 2 && p > 1.0 + 4.0 / (static_cast<double>(N) - 1.0) + 1e-12)
      throw std::invalid_argument("Params: p must be <= 1 + 4/(N-1) when N >= 2");
    if (!std::isfinite(kappa0()) || kappa0() <= 0.0)
      throw std::invalid_argument("Params: kappa0 is not finite and positive");
  }

  // Amplitude of the constant self-similar profile, (2(p+1)/(p-1)^2)^{1/(p-1)}.
  double kappa0() const {
    return std::pow(2.0 * (p + 1.0) / ((p - 1.0) * (p - 1.0)), 1.0 / (p - 1.0));
  }

  // Blow-up rate exponent 2/(p-1) of u ~ (T-t)^{-2/(p-1)}.
  double rate_exponent() const { return 2.0 / (p - 1.0); }

  // Coefficient 2(p+1)/(p-1)^2 of the linear term of the similarity equation.
  double linear_coef() const { return 2.0 * (p + 1.0) / ((p - 1.0) * (p - 1.0)); }
};

// |u|^{q-1} u with 0 mapped to 0; q need not be an integer.
inline double signed_power(double u, double q) {
  if (u == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(u), q), u);
}

// |u|^q with 0 mapped to 0.
inline double abs_power(double u, double q) {
  if (u == 0.0) return 0.0;
  return std::pow(std::abs(u), q);
}

// Inverse hyperbolic tangent, the natural coordinate for the soliton velocity.
inline double argth(double d) {
  if (!(std::abs(d) < 1.0)) throw std::domain_error("argth: |d| must be < 1");
  return 0.5 * std::log((1.0 + d) / (1.0 - d));
}

}  // namespace rwave
