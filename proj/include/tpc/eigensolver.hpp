#pragma once

#include <vector>

#include "tpc/dense_curve.hpp"
#include "tpc/radial_profile.hpp"

namespace tpc {

/// Default relative tolerance of the principal eigenvalue.
inline constexpr double kDefaultSolverTol = 1e-10;

/// Number of uniform grid nodes stored in every solution curve, in addition
/// to the interface radii.
inline constexpr int kUniformNodes = 2048;

struct ShotResult {
  double boundary_value = 0.0;  ///< y(1) for y(0) = 1, y'(0) = 0
  int interior_sign_changes = 0;
  DenseCurve curve;
};

/// Integrates y'' + (n-1)/r y' + (lambda / sigma) y = 0 outward from the
/// origin with y(0) = 1, keeping y and sigma y' continuous at interfaces.
ShotResult shoot(const RadialProfile& profile, double lambda);

struct EigenSample {
  double r;
  double y;
  double y_prime;
  double sigma;
};

struct EigenSolution {
  RadialProfile profile;
  double lambda;
  /// Radial eigenfunction, positive and with unit L2 norm over the ball.
  DenseCurve curve;

  /// Stored nodes from the center outwards. Interface radii appear twice,
  /// first with the inner and then with the outer one-sided limits.
  std::vector<EigenSample> samples() const;
};

/// Smallest lambda with a nontrivial solution of the two-phase problem,
/// accurate to `tol` relative. Throws SolverError if the bracket
/// [alpha mu^2, beta mu^2] fails or the search does not converge.
EigenSolution principal_eigenvalue(const RadialProfile& profile,
                                   double tol = kDefaultSolverTol);

/// Energy int sigma |y'|^2 dx of the solution's eigenfunction, with sigma
/// taken from `profile` (which may differ from the solution's own profile).
double rayleigh_quotient(const RadialProfile& profile, const EigenSolution& sol);

/// int y^2 dx over the ball.
double l2_norm_squared(const EigenSolution& sol);

/// |y'(r)|; at an interface `side` picks the one-sided limit.
double gradient_magnitude(const EigenSolution& sol, double r, Side side = Side::left);

}  // namespace tpc
