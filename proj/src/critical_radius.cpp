#include "tpc/critical_radius.hpp"

#include <cmath>
#include <stdexcept>

#include "tpc/errors.hpp"
#include "tpc/quadrature.hpp"
#include "tpc/special_functions.hpp"

namespace tpc {

using special::bessel_j;
using special::bessel_j_scaled;

namespace {

// r^{-nu} J_nu(mu r) without the normalization constant.
double raw_psi(const GroundState& gs, double r) {
  const double nu = gs.dim.bessel_order();
  return std::pow(gs.mu, nu) * bessel_j_scaled(nu, gs.mu * r);
}

}  // namespace

GroundState ground_state(Dimension dim) {
  GroundState gs{dim, special::bessel_zero(dim.bessel_order(), 1), 1.0};
  auto integrand = [&](double r) {
    const double v = raw_psi(gs, r);
    return v * v * radial_weight(dim, r);
  };
  const QuadratureResult q = adaptive_simpson(integrand, 0.0, 1.0, 1e-10);
  if (!q.converged || !(q.value > 0.0))
    throw SolverError("ground state normalization quadrature did not converge");
  gs.norm_constant = 1.0 / std::sqrt(q.value);
  return gs;
}

double psi(const GroundState& gs, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("psi expects r in [0, 1]");
  return gs.norm_constant * raw_psi(gs, r);
}

double psi_prime_abs(const GroundState& gs, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("psi' expects r in [0, 1]");
  // d/dr [r^{-nu} J_nu(mu r)] = -mu r^{-nu} J_{nu+1}(mu r)
  const double nu = gs.dim.bessel_order();
  return gs.norm_constant * std::pow(gs.mu, nu + 2.0) * r *
         bessel_j_scaled(nu + 1.0, gs.mu * r);
}

double critical_map(Dimension dim, double t) {
  const double nu = dim.bessel_order();
  const double mu = special::bessel_zero(nu, 1);
  if (!(t > 0.0) || !(t < mu))
    throw std::domain_error("critical_map expects 0 < t < j_{n/2-1,1}");
  return (dim.value() - 1) * bessel_j(nu + 1.0, t) / bessel_j(nu, t);
}

CriticalPoint critical_point(Dimension dim) {
  const double nu = dim.bessel_order();
  const int n = dim.value();
  const double mu = special::bessel_zero(nu, 1);
  auto h = [&](double t) { return t * bessel_j(nu, t) - (n - 1) * bessel_j(nu + 1.0, t); };
  double lo = 0.01 * mu;
  double hi = 0.99 * mu;
  if (!(h(lo) > 0.0) || !(h(hi) < 0.0))
    throw SolverError("critical radius root is not bracketed for n = " + std::to_string(n));
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  const double t_star = 0.5 * (lo + hi);
  return {t_star, t_star / mu, mu};
}

double rho_n(Dimension dim) { return critical_point(dim).rho; }

double boundary_contact_radius(const GroundState& gs) {
  const double target = psi_prime_abs(gs, 1.0);
  double lo = 0.0;
  double hi = critical_point(gs.dim).rho;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (psi_prime_abs(gs, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DenseCurve ground_state_curve(const GroundState& gs, int nodes) {
  if (nodes < 2) throw std::invalid_argument("ground state curve needs >= 2 nodes");
  const int n = gs.dim.value();
  const double mu2 = gs.mu * gs.mu;
  DenseCurve::Piece piece;
  piece.reserve(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double r = i == nodes - 1 ? 1.0 : static_cast<double>(i) / (nodes - 1);
    const double value = psi(gs, r);
    const double slope = -psi_prime_abs(gs, r);
    const double curvature = r == 0.0 ? -mu2 * value / n : -(n - 1) / r * slope - mu2 * value;
    piece.push_back({r, value, slope, curvature});
  }
  return DenseCurve({std::move(piece)});
}

}  // namespace tpc
