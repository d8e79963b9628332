#include "tpc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "tpc/critical_radius.hpp"
#include "tpc/rearrangement.hpp"

namespace tpc {

namespace {

// max |u'| over [lo, hi] (left limits), refined by golden section around
// the best node.
double max_gradient(const DenseCurve& curve, double lo, double hi) {
  double best = 0.0;
  const DenseCurve::Piece* best_piece = nullptr;
  std::size_t best_index = 0;
  for (const DenseCurve::Piece& piece : curve.pieces()) {
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (piece[i].r < lo || piece[i].r > hi) continue;
      const double v = std::abs(piece[i].slope);
      if (v > best) {
        best = v;
        best_piece = &piece;
        best_index = i;
      }
    }
  }
  if (best_piece == nullptr) return std::abs(curve.slope(hi));
  const auto& piece = *best_piece;
  double a = piece[best_index == 0 ? 0 : best_index - 1].r;
  double b = piece[std::min(best_index + 1, piece.size() - 1)].r;
  a = std::max(a, lo);
  b = std::min(b, hi);
  auto f = [&](double r) { return std::abs(curve.slope(r, Side::left)); };
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 80 && b - a > 1e-14; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max({best, f1, f2});
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::refuted: return "refuted";
    case Verdict::not_refuted: return "not_refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RadialProfile ball_profile(Dimension dim, const VolumeSpec& spec, double alpha, double beta) {
  if (!(dim == spec.dim())) throw std::invalid_argument("dimension mismatch");
  const double rho = ball_radius_for_volume(spec);
  return RadialProfile(dim, alpha, beta, {{rho, Material::high}, {1.0, Material::low}});
}

CounterexampleReport check_counterexample(Dimension dim, const VolumeSpec& spec, double alpha,
                                          double beta, double solver_tol) {
  const RadialProfile ball = ball_profile(dim, spec, alpha, beta);
  const double rho = ball_radius_for_volume(spec);
  const GroundState gs = ground_state(dim);
  const ImproveResult step = improve(ball, spec, solver_tol);
  const EigenSolution& sol = step.before;

  CounterexampleReport report{
      dim.value(),
      spec.fraction(),
      alpha,
      beta,
      rho,
      rho_n(dim),
      sol.lambda,
      sol.lambda,
      step.profile.high_region(),
      gradient_magnitude(sol, 1.0, Side::left),
      gradient_magnitude(sol, rho, Side::right),
      gradient_magnitude(sol, rho, Side::left),
      max_gradient(sol.curve, 0.0, rho),
      psi_prime_abs(gs, rho),
      psi_prime_abs(gs, 1.0),
      psi_prime_abs(gs, rho) - psi_prime_abs(gs, 1.0),
      false,
      Verdict::not_refuted};

  if (alpha == beta) return report;

  const double total = unit_ball_volume(dim);
  report.set_changed =
      symmetric_difference_measure(ball.high_region(), report.improved_set) > 1e-9 * total;
  if (!report.set_changed) return report;

  report.lambda_improved = principal_eigenvalue(step.profile, solver_tol).lambda;
  const bool clear_gap = report.gap() > 10.0 * solver_tol * report.lambda_ball;
  report.verdict = clear_gap ? Verdict::refuted : Verdict::inconclusive;
  return report;
}

std::vector<SweepRow> sweep(const std::vector<int>& dims, const std::vector<double>& fractions,
                            const std::vector<double>& contrasts, double solver_tol,
                            unsigned threads) {
  if (dims.empty() || fractions.empty() || contrasts.empty())
    throw std::invalid_argument("sweep grids must be nonempty");
  std::vector<SweepRow> rows;
  for (int n : dims)
    for (double f : fractions)
      for (double c : contrasts) rows.push_back({n, f, 1.0, c, std::nullopt, {}});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& row = rows[i];
      try {
        const Dimension dim(row.n);
        row.report = check_counterexample(dim, VolumeSpec::from_fraction(dim, row.fraction),
                                          row.alpha, row.beta, solver_tol);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

}  // namespace tpc
