#pragma once

// Bessel functions of the first kind for real order nu >= 0 and real
// argument 0 <= x <= kMaxArgument, their derivatives and positive zeros,
// and integer / half-integer gamma values.

namespace tpc::special {

/// Upper end of the supported argument range.
inline constexpr double kMaxArgument = 60.0;

/// J_nu(x). Absolute error is below 1e-13 on [0, kMaxArgument].
double bessel_j(double nu, double x);

/// x^{-nu} J_nu(x), finite and analytic at x = 0 where it equals
/// 1 / (2^nu Gamma(nu + 1)).
double bessel_j_scaled(double nu, double x);

/// J'_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x). At x = 0 the limit is returned
/// for nu >= 1; smaller orders throw std::domain_error there.
double bessel_j_prime(double nu, double x);

/// m-th positive zero j_{nu,m} (m >= 1), accurate to 1e-10.
double bessel_zero(double nu, int m);

struct CrossProduct {
  double lhs = 0.0;             ///< (nu2^2 - nu1^2) * int_0^tau J_nu2 J_nu1 / s ds
  double rhs = 0.0;             ///< tau * (J'_nu2 J_nu1 - J_nu2 J'_nu1)(tau)
  double error_estimate = 0.0;  ///< quadrature error estimate carried by lhs
  bool converged = true;
};

/// Evaluates both sides of the Bessel cross-product integral identity.
/// The integral over [0, min(tau, 1)] is taken from the term-by-term
/// integrated product series, the remainder by adaptive Simpson.
CrossProduct cross_product_check(double nu1, double nu2, double tau);

/// Gamma(two_a / 2) for a positive integer two_a.
double gamma_half(int two_a);

}  // namespace tpc::special
