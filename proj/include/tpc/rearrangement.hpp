#pragma once

#include <vector>

#include "tpc/dense_curve.hpp"
#include "tpc/eigensolver.hpp"
#include "tpc/radial_geometry.hpp"
#include "tpc/radial_profile.hpp"

namespace tpc {

/// Sublevel set {r : |u'(r)| <= t} chosen so that its measure is A.
struct ThresholdResult {
  double t = 0.0;
  RadialSet set;
  double achieved_measure = 0.0;
};

/// Measure of {r : |curve'(r)| <= s}.
double sublevel_measure(const DenseCurve& curve, Dimension dim, double s);
RadialSet sublevel_set(const DenseCurve& curve, Dimension dim, double s);

/// Smallest threshold t whose sublevel set of |curve'| has measure >= A,
/// for 0 < A <= omega_n. The achieved measure matches A to 1e-10 omega_n.
ThresholdResult level_threshold(const DenseCurve& curve, Dimension dim, double measure);
ThresholdResult level_threshold(const EigenSolution& sol, const VolumeSpec& spec);

struct ImproveResult {
  RadialProfile profile;  ///< high region replaced by the thresholded set
  EigenSolution before;   ///< eigenpair of the input profile
  ThresholdResult threshold;
};

/// One rearrangement step: solve on `profile`, then move the high material
/// onto the volume-A sublevel set of |grad u|. The new eigenvalue never
/// exceeds the old one. With alpha == beta the input is returned unchanged.
ImproveResult improve(const RadialProfile& profile, const VolumeSpec& spec,
                      double solver_tol = kDefaultSolverTol);

struct TraceStep {
  RadialProfile profile;
  double lambda;
};

struct ImprovementTrace {
  std::vector<TraceStep> steps;  ///< initial profile first
  bool converged = false;
  int iterations = 0;  ///< number of improve() calls
  RadialProfile fixed_point;
};

/// Iterates improve() until consecutive high regions differ by less than
/// set_tol * omega_n in symmetric-difference measure, or max_iter steps.
ImprovementTrace optimize(const RadialProfile& initial, const VolumeSpec& spec,
                          int max_iter = 50, double set_tol = 1e-8,
                          double solver_tol = kDefaultSolverTol);

enum class SetShape { centered_ball, ball_and_boundary_annulus, other };
const char* to_string(SetShape shape);
SetShape classify(const RadialSet& set);

struct LowContrastResult {
  ThresholdResult threshold;
  SetShape shape;
  double rho_n;                     ///< maximizer of |psi'|
  double critical_ball_measure;     ///< |B(0, rho_n)|
  double contact_radius;            ///< a* with |psi'(a*)| = |psi'(1)|
  double boundary_contact_measure;  ///< |B(0, a*)|
};

/// Minimizer of int sigma |grad psi|^2 over the two-phase class with
/// |high| = A, where psi is the Laplacian ground state.
LowContrastResult low_contrast_optimizer(Dimension dim, const VolumeSpec& spec);

}  // namespace tpc
