#include "tpc/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tpc/critical_radius.hpp"
#include "tpc/errors.hpp"

namespace tpc {

namespace {

// Interval of a curve segment on which |u'| is monotone.
struct MonotonePiece {
  double a, b;
  double va, vb;  // |u'| at the ends
  const CurveNode* p;
  const CurveNode* q;

  double gradient(double x) const {
    return std::abs(hermite(p->r, q->r, p->slope, q->slope, p->curvature, q->curvature, x));
  }

  // Point where |u'| crosses s, given it lies between va and vb.
  double crossing(double s) const {
    double lo = a, hi = b;
    const bool rising = va <= vb;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
      const double mid = 0.5 * (lo + hi);
      const bool below = gradient(mid) <= s;
      ((below == rising) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
};

std::vector<MonotonePiece> monotone_pieces(const DenseCurve& curve) {
  std::vector<MonotonePiece> out;
  for (const DenseCurve::Piece& piece : curve.pieces()) {
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      const CurveNode* p = &piece[i];
      const CurveNode* q = &piece[i + 1];
      const double h = q->r - p->r;
      auto slope_at = [&](double x) {
        return hermite(p->r, q->r, p->slope, q->slope, p->curvature, q->curvature, x);
      };

      // The slope interpolant is cubic in s = (x - a)/h; split at the roots
      // of its derivative A s^2 + B s + C and at its own sign changes.
      const double A = 6 * p->slope + 3 * h * p->curvature - 6 * q->slope + 3 * h * q->curvature;
      const double B = -6 * p->slope - 4 * h * p->curvature + 6 * q->slope - 2 * h * q->curvature;
      const double C = h * p->curvature;
      std::vector<double> cuts{0.0};
      auto add_root = [&](double s) {
        if (s > 0.0 && s < 1.0) cuts.push_back(s);
      };
      if (std::abs(A) > 1e-300) {
        const double disc = B * B - 4 * A * C;
        if (disc >= 0.0) {
          const double sq = std::sqrt(disc);
          const double qq = -0.5 * (B + std::copysign(sq, B));
          if (qq != 0.0) {
            add_root(qq / A);
            add_root(C / qq);
          } else {
            add_root(-B / (2 * A));
          }
        }
      } else if (std::abs(B) > 1e-300) {
        add_root(-C / B);
      }
      cuts.push_back(1.0);
      std::sort(cuts.begin(), cuts.end());

      std::vector<double> xs;
      for (std::size_t c = 0; c < cuts.size(); ++c) {
        const double x = c + 1 == cuts.size() ? q->r : p->r + cuts[c] * h;
        if (!xs.empty()) {
          const double x0 = xs.back();
          const double f0 = slope_at(x0);
          const double f1 = slope_at(x);
          if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
            double lo = x0, hi = x;
            for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
              const double mid = 0.5 * (lo + hi);
              ((slope_at(mid) < 0.0) == (f0 < 0.0) ? lo : hi) = mid;
            }
            xs.push_back(0.5 * (lo + hi));
          }
        }
        if (xs.empty() || x > xs.back()) xs.push_back(x);
      }
      for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        MonotonePiece m{xs[k], xs[k + 1], 0.0, 0.0, p, q};
        m.va = m.gradient(m.a);
        m.vb = m.gradient(m.b);
        out.push_back(m);
      }
    }
  }
  return out;
}

std::vector<Interval> sublevel_intervals(const std::vector<MonotonePiece>& pieces, double s) {
  std::vector<Interval> out;
  for (const MonotonePiece& m : pieces) {
    const double top = std::max(m.va, m.vb);
    const double bottom = std::min(m.va, m.vb);
    if (top <= s) {
      out.push_back({m.a, m.b});
    } else if (bottom <= s) {
      const double c = m.crossing(s);
      if (m.va <= s) out.push_back({m.a, c});
      else out.push_back({c, m.b});
    }
  }
  return out;
}

ThresholdResult threshold_pieces(const std::vector<MonotonePiece>& pieces, Dimension dim,
                                 double target) {
  const double total = unit_ball_volume(dim);
  if (!(target > 0.0) || !(target <= total))
    throw std::domain_error("threshold volume must lie in (0, omega_n]");
  double top = 0.0;
  for (const MonotonePiece& m : pieces) top = std::max({top, m.va, m.vb});

  auto set_at = [&](double s) { return RadialSet(dim, sublevel_intervals(pieces, s)); };
  if (target >= total) return {top, RadialSet(dim, {{0.0, 1.0}}), total};

  const double measure_tol = 1e-10 * total;
  double lo = 0.0;
  double hi = top;
  RadialSet best = set_at(hi);
  double best_measure = best.measure();
  for (int i = 0; i < 400; ++i) {
    const bool s_done = hi - lo <= 1e-12 * std::max(1.0, hi);
    if (s_done && best_measure - target <= measure_tol) break;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) break;
    const double mid = 0.5 * (lo + hi);
    RadialSet candidate = set_at(mid);
    const double m = candidate.measure();
    if (m >= target) {
      hi = mid;
      best = std::move(candidate);
      best_measure = m;
    } else {
      lo = mid;
    }
  }

  if (best_measure - target > measure_tol) {
    // A plateau of |u'| at level t: keep the lower half of every interval
    // that the final bisection step could not resolve.
    const RadialSet below = set_at(lo);
    std::vector<Interval> parts = below.intervals();
    for (const Interval& iv : best.intervals()) {
      double cursor = iv.lo;
      for (const Interval& in : below.intervals()) {
        if (in.hi <= cursor || in.lo >= iv.hi) continue;
        if (in.lo > cursor) parts.push_back({cursor, cursor + 0.5 * (in.lo - cursor)});
        cursor = std::max(cursor, in.hi);
      }
      if (cursor < iv.hi) parts.push_back({cursor, cursor + 0.5 * (iv.hi - cursor)});
    }
    best = RadialSet(dim, std::move(parts));
    best_measure = best.measure();
  }
  return {hi, std::move(best), best_measure};
}

}  // namespace

double sublevel_measure(const DenseCurve& curve, Dimension dim, double s) {
  return sublevel_set(curve, dim, s).measure();
}

RadialSet sublevel_set(const DenseCurve& curve, Dimension dim, double s) {
  return RadialSet(dim, sublevel_intervals(monotone_pieces(curve), s));
}

ThresholdResult level_threshold(const DenseCurve& curve, Dimension dim, double measure) {
  return threshold_pieces(monotone_pieces(curve), dim, measure);
}

ThresholdResult level_threshold(const EigenSolution& sol, const VolumeSpec& spec) {
  if (!(sol.profile.dim() == spec.dim()))
    throw std::invalid_argument("solution and volume spec dimensions differ");
  return level_threshold(sol.curve, spec.dim(), spec.measure());
}

ImproveResult improve(const RadialProfile& profile, const VolumeSpec& spec, double solver_tol) {
  if (!(profile.dim() == spec.dim()))
    throw std::invalid_argument("profile and volume spec dimensions differ");
  const double total = unit_ball_volume(spec.dim());
  const double have = profile.high_measure();
  if (std::abs(have - spec.measure()) > 1e-8 * total)
    throw std::invalid_argument("profile high-region measure " + std::to_string(have) +
                                " does not match the volume constraint " +
                                std::to_string(spec.measure()));

  EigenSolution before = principal_eigenvalue(profile, solver_tol);
  if (profile.alpha() == profile.beta()) {
    ThresholdResult unchanged{0.0, profile.high_region(), have};
    return {profile, std::move(before), std::move(unchanged)};
  }
  ThresholdResult threshold = level_threshold(before, spec);
  RadialProfile next =
      RadialProfile::from_high_region(profile.alpha(), profile.beta(), threshold.set);
  return {std::move(next), std::move(before), std::move(threshold)};
}

ImprovementTrace optimize(const RadialProfile& initial, const VolumeSpec& spec, int max_iter,
                          double set_tol, double solver_tol) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const double total = unit_ball_volume(spec.dim());
  ImprovementTrace trace{{}, false, 0, initial};
  RadialProfile current = initial;
  for (int it = 0; it < max_iter; ++it) {
    ImproveResult step = improve(current, spec, solver_tol);
    ++trace.iterations;
    if (trace.steps.empty())
      trace.steps.push_back({current, step.before.lambda});
    else
      trace.steps.back().lambda = step.before.lambda;

    const double change =
        symmetric_difference_measure(current.high_region(), step.profile.high_region());
    if (change < set_tol * total) {
      trace.converged = true;
      break;
    }
    current = std::move(step.profile);
    trace.steps.push_back({current, 0.0});
  }
  if (!trace.converged) trace.steps.back().lambda = principal_eigenvalue(current, solver_tol).lambda;
  trace.fixed_point = current;
  return trace;
}

const char* to_string(SetShape shape) {
  switch (shape) {
    case SetShape::centered_ball: return "centered_ball";
    case SetShape::ball_and_boundary_annulus: return "ball_and_boundary_annulus";
    case SetShape::other: return "other";
  }
  return "other";
}

SetShape classify(const RadialSet& set) {
  const auto& iv = set.intervals();
  if (set.is_centered_ball()) return SetShape::centered_ball;
  if (iv.size() == 2 && iv[0].lo == 0.0 && iv[1].hi == 1.0)
    return SetShape::ball_and_boundary_annulus;
  return SetShape::other;
}

LowContrastResult low_contrast_optimizer(Dimension dim, const VolumeSpec& spec) {
  if (!(dim == spec.dim())) throw std::invalid_argument("dimension mismatch");
  const GroundState gs = ground_state(dim);
  const DenseCurve curve = ground_state_curve(gs);
  ThresholdResult threshold = level_threshold(curve, dim, spec.measure());
  const SetShape shape = classify(threshold.set);
  const double total = unit_ball_volume(dim);
  const double rho = rho_n(dim);
  const double contact = boundary_contact_radius(gs);
  const int n = dim.value();
  return {std::move(threshold), shape, rho, total * std::pow(rho, n), contact,
          total * std::pow(contact, n)};
}

}  // namespace tpc
