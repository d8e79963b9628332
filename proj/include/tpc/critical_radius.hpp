#pragma once

#include "tpc/dense_curve.hpp"
#include "tpc/radial_geometry.hpp"

namespace tpc {

/// Principal Dirichlet eigenfunction of the Laplacian on the unit n-ball,
/// psi(r) = c * r^{1-n/2} J_{n/2-1}(mu r) with mu = j_{n/2-1,1}, normalized
/// to unit L2 norm. Its eigenvalue is mu^2.
struct GroundState {
  Dimension dim;
  double mu;
  double norm_constant;
};

GroundState ground_state(Dimension dim);

double psi(const GroundState& gs, double r);
double psi_prime_abs(const GroundState& gs, double r);

/// (n-1) J_{n/2}(t) / J_{n/2-1}(t) on 0 < t < mu; strictly increasing.
double critical_map(Dimension dim, double t);

struct CriticalPoint {
  double t_star;  ///< root of t J_{n/2-1}(t) - (n-1) J_{n/2}(t) in (0, mu)
  double rho;     ///< t_star / mu, the maximizer of |psi'| on (0, 1)
  double mu;
};

CriticalPoint critical_point(Dimension dim);
double rho_n(Dimension dim);

/// Radius a* in (0, rho_n) with |psi'(a*)| = |psi'(1)|. Sublevel sets of
/// |psi'| are centered balls exactly up to the measure of B(0, a*).
double boundary_contact_radius(const GroundState& gs);

/// psi sampled on a uniform grid of `nodes` points with exact derivatives.
DenseCurve ground_state_curve(const GroundState& gs, int nodes = 2048);

}  // namespace tpc
