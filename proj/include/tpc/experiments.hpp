#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpc/eigensolver.hpp"
#include "tpc/radial_geometry.hpp"
#include "tpc/radial_profile.hpp"

namespace tpc {

enum class Verdict { refuted, not_refuted, inconclusive };
const char* to_string(Verdict v);

/// Outcome of testing whether the centered ball B(0, rho) of volume A can be
/// beaten by one rearrangement step.
struct CounterexampleReport {
  int n;
  double fraction;  ///< A / omega_n
  double alpha;
  double beta;
  double rho;    ///< radius of the centered ball with volume A
  double rho_n;  ///< maximizer of |psi'|
  double lambda_ball;
  double lambda_improved;
  RadialSet improved_set;
  double y2_prime_at_1;    ///< |y'(1)| for the ball solution
  double y2_prime_at_rho;  ///< |y'(rho+)|, outer side of the interface
  double y1_prime_at_rho;  ///< |y'(rho-)|, inner side of the interface
  double z;                ///< max of |y'| on [0, rho]
  double psi_prime_at_rho;
  double psi_prime_at_1;
  double d_n;  ///< |psi'(rho)| - |psi'(1)|
  bool set_changed;
  Verdict verdict;

  double gap() const { return lambda_ball - lambda_improved; }
};

/// High material on [0, rho], low on [rho, 1], rho = (A / omega_n)^{1/n}.
RadialProfile ball_profile(Dimension dim, const VolumeSpec& spec, double alpha, double beta);

/// Refuted only if one rearrangement step lowers lambda by more than
/// 10 * solver_tol (relative) and moves the high region; a changed set with
/// a smaller gap is inconclusive.
CounterexampleReport check_counterexample(Dimension dim, const VolumeSpec& spec, double alpha,
                                          double beta, double solver_tol = kDefaultSolverTol);

struct SweepRow {
  int n;
  double fraction;
  double alpha;
  double beta;
  std::optional<CounterexampleReport> report;
  std::string error;  ///< set when the point failed
};

/// One row per (n, fraction, contrast) with alpha = 1 and beta = contrast,
/// ordered by dims, then fractions, then contrasts as given. Points run on
/// up to `threads` workers (0 picks the hardware concurrency); failures are
/// recorded in their row.
std::vector<SweepRow> sweep(const std::vector<int>& dims, const std::vector<double>& fractions,
                            const std::vector<double>& contrasts,
                            double solver_tol = kDefaultSolverTol, unsigned threads = 0);

}  // namespace tpc
