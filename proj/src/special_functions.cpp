#include "tpc/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpc/quadrature.hpp"

namespace tpc::special {

namespace {

// Below this argument the power series is summed directly; its largest term
// is then ~5e3, so long double summation keeps the absolute error near 1e-15.
constexpr double kSeriesCutoff = 12.0;

void check_order(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw std::domain_error("Bessel order nu must be finite and >= 0, got " +
                            std::to_string(nu));
}

void check_argument(double x) {
  if (!(x >= 0.0))
    throw std::domain_error("Bessel argument x must be >= 0, got " +
                            std::to_string(x));
  if (x > kMaxArgument)
    throw std::range_error("Bessel argument x = " + std::to_string(x) +
                           " exceeds the working range [0, 60]");
}

// sum_k (-1)^k (x/2)^{2k} / (2^nu k! Gamma(nu + k + 1)), Kahan-compensated.
long double scaled_series(double nu, double x) {
  const long double lnu = nu;
  const long double q = 0.25L * static_cast<long double>(x) * x;
  long double term = 1.0L / (std::pow(2.0L, lnu) * std::tgamma(lnu + 1.0L));
  long double sum = term;
  long double carry = 0.0L;
  for (int k = 0; k < 500; ++k) {
    term *= -q / ((k + 1.0L) * (lnu + k + 1.0L));
    const long double y = term - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    const bool decreasing = (k + 1.0L) * (lnu + k + 1.0L) > q;
    if (decreasing && std::abs(term) <= 1e-18L * std::abs(sum)) break;
  }
  return sum;
}

// Miller backward recurrence, normalized with
//   (x/2)^nu / Gamma(nu+1) = sum_m w_m J_{nu+2m}(x),
//   w_0 = 1, w_m = (nu + 2m) Gamma(nu+m) / (m! Gamma(nu+1)).
long double miller(double nu, double x) {
  const long double lnu = nu;
  const long double lx = x;
  const int top = 2 * static_cast<int>(std::ceil((x + 50.0) / 2.0));

  std::vector<long double> weight(top / 2 + 1);
  weight[0] = 1.0L;
  long double b = 1.0L;
  for (int m = 1; m <= top / 2; ++m) {
    weight[m] = (lnu + 2.0L * m) * b;
    b *= (lnu + m) / (m + 1.0L);
  }

  long double above = 0.0L;
  long double current = 1e-30L;
  long double norm = weight[top / 2] * current;
  for (int k = top; k >= 1; --k) {
    const long double below = 2.0L * (lnu + k) / lx * current - above;
    above = current;
    current = below;
    if ((k - 1) % 2 == 0) norm += weight[(k - 1) / 2] * current;
    if (std::abs(current) > 1e200L) {
      current *= 1e-200L;
      above *= 1e-200L;
      norm *= 1e-200L;
    }
  }
  const long double lead =
      std::exp(lnu * std::log(lx / 2.0L) - std::lgamma(lnu + 1.0L));
  return current * lead / norm;
}

}  // namespace

double bessel_j_scaled(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (x <= kSeriesCutoff) return static_cast<double>(scaled_series(nu, x));
  return static_cast<double>(miller(nu, x) / std::pow(static_cast<long double>(x), nu));
}

double bessel_j(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x <= kSeriesCutoff)
    return static_cast<double>(std::pow(static_cast<long double>(x), nu) *
                               scaled_series(nu, x));
  return static_cast<double>(miller(nu, x));
}

double bessel_j_prime(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (x == 0.0) {
    if (nu < 1.0)
      throw std::domain_error("J'_nu(0) is singular for nu < 1 (nu = " +
                              std::to_string(nu) + ")");
    return nu == 1.0 ? 0.5 : 0.0;
  }
  return nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

double bessel_zero(double nu, int m) {
  check_order(nu);
  if (m < 1) throw std::domain_error("zero index m must be >= 1");

  // Consecutive zeros are more than 2 apart for every nu >= 0, so a 0.1 step
  // never skips a pair of sign changes.
  constexpr double step = 0.1;
  double a = std::max(nu, 0.5);
  double fa = bessel_j(nu, a);
  int found = 0;
  while (a + step <= kMaxArgument) {
    const double b = a + step;
    const double fb = bessel_j(nu, b);
    if (fb == 0.0) {
      if (++found == m) return b;
    } else if ((fa < 0.0) != (fb < 0.0) && fa != 0.0) {
      if (++found == m) {
        double lo = a, hi = b, flo = fa, fhi = fb;
        while (hi - lo > 1e-12) {
          const double mid = 0.5 * (lo + hi);
          const double fmid = bessel_j(nu, mid);
          if (fmid == 0.0) return mid;
          if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
          } else {
            hi = mid;
            fhi = fmid;
          }
        }
        const double secant = lo - flo * (hi - lo) / (fhi - flo);
        return (secant >= lo && secant <= hi) ? secant : 0.5 * (lo + hi);
      }
    }
    a = b;
    fa = fb;
  }
  throw std::range_error("zero j_{" + std::to_string(nu) + "," + std::to_string(m) +
                         "} lies beyond the working range");
}

CrossProduct cross_product_check(double nu1, double nu2, double tau) {
  check_order(nu1);
  check_order(nu2);
  if (!(tau > 0.0)) throw std::domain_error("tau must be positive");
  check_argument(tau);

  CrossProduct out;
  out.rhs = tau * (bessel_j_prime(nu2, tau) * bessel_j(nu1, tau) -
                   bessel_j(nu2, tau) * bessel_j_prime(nu1, tau));
  const double factor = nu2 * nu2 - nu1 * nu1;
  if (factor == 0.0) return out;

  // Head: J_nu1 J_nu2 / s = s^{a-1} sum_j C_j s^{2j}, integrated termwise.
  const double head_end = std::min(tau, 1.0);
  const double a = nu1 + nu2;
  constexpr int terms = 30;
  std::vector<double> c1(terms), c2(terms);
  c1[0] = 1.0 / (std::pow(2.0, nu1) * std::tgamma(nu1 + 1.0));
  c2[0] = 1.0 / (std::pow(2.0, nu2) * std::tgamma(nu2 + 1.0));
  for (int k = 0; k + 1 < terms; ++k) {
    c1[k + 1] = -c1[k] / (4.0 * (k + 1.0) * (nu1 + k + 1.0));
    c2[k + 1] = -c2[k] / (4.0 * (k + 1.0) * (nu2 + k + 1.0));
  }
  double head = 0.0;
  for (int j = 0; j < terms; ++j) {
    double cj = 0.0;
    for (int k = 0; k <= j; ++k) cj += c1[k] * c2[j - k];
    head += cj * std::pow(head_end, a + 2.0 * j) / (a + 2.0 * j);
  }

  double tail = 0.0;
  if (tau > head_end) {
    auto integrand = [&](double s) { return bessel_j(nu2, s) * bessel_j(nu1, s) / s; };
    const QuadratureResult q = adaptive_simpson(integrand, head_end, tau, 1e-10);
    tail = q.value;
    out.error_estimate = std::abs(factor) * q.error_estimate;
    out.converged = q.converged;
  }
  out.lhs = factor * (head + tail);
  return out;
}

double gamma_half(int two_a) {
  if (two_a < 1)
    throw std::domain_error("gamma_half expects a positive integer 2a, got " +
                            std::to_string(two_a));
  double value = 1.0;
  if (two_a % 2 == 0) {
    // Gamma(k) = (k-1)!
    for (int i = 2; i < two_a / 2; ++i) value *= i;
    return value;
  }
  // Gamma(k + 1/2) = sqrt(pi) * prod_{i=1..k} (i - 1/2)
  const int k = two_a / 2;
  value = std::sqrt(std::numbers::pi);
  for (int i = 1; i <= k; ++i) value *= i - 0.5;
  return value;
}

}  // namespace tpc::special
