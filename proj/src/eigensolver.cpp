#include "tpc/eigensolver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tpc/errors.hpp"
#include "tpc/special_functions.hpp"

namespace tpc {

namespace {

constexpr double kAbsTol = 1e-11;
constexpr double kRelTol = 1e-11;
constexpr double kStartRadius = 1e-6;
constexpr double kSnap = 1e-13;

struct State {
  double y;
  double p;  // y'
};

// Radial ODE inside one layer: y'' = -(n-1)/r y' - k y, k = lambda / sigma.
struct LayerOde {
  int n;
  double k;
  State operator()(double r, const State& s) const {
    return {s.p, -(n - 1) / r * s.p - k * s.y};
  }
  double curvature(double r, const State& s) const {
    return r == 0.0 ? -k * s.y / n : -(n - 1) / r * s.p - k * s.y;
  }
};

// Dormand-Prince 5(4) from r to r_end; `h` carries the step size across calls.
State advance(const LayerOde& f, double r, double r_end, State s, double& h) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  auto axpy = [](const State& s, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = s;
    for (const auto& [c, k] : terms) {
      out.y += h * c * k->y;
      out.p += h * c * k->p;
    }
    return out;
  };

  int guard = 0;
  while (r < r_end) {
    if (++guard > 1000000) throw SolverError("integrator exceeded its step budget");
    const bool last = r + h >= r_end;
    const double step = last ? r_end - r : h;
    if (step < 1e-15 * std::max(1.0, r)) throw SolverError("integrator step-size underflow");

    const State k1 = f(r, s);
    const State k2 = f(r + step / 5, axpy(s, step, {{a21, &k1}}));
    const State k3 = f(r + 3 * step / 10, axpy(s, step, {{a31, &k1}, {a32, &k2}}));
    const State k4 = f(r + 4 * step / 5, axpy(s, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = f(r + 8 * step / 9,
                       axpy(s, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = f(r + step, axpy(s, step,
                                      {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State next =
        axpy(s, step, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = f(r + step, next);
    const State err = axpy(State{0.0, 0.0}, step,
                           {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});

    const double sy = kAbsTol + kRelTol * std::max(std::abs(s.y), std::abs(next.y));
    const double sp = kAbsTol + kRelTol * std::max(std::abs(s.p), std::abs(next.p));
    const double norm = std::max(std::abs(err.y) / sy, std::abs(err.p) / sp);
    const double factor =
        norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    if (norm <= 1.0) {
      r = last ? r_end : r + step;
      s = next;
      if (!last || factor < 1.0) h = step * factor;
    } else {
      h = step * factor;
    }
  }
  return s;
}

std::vector<double> layer_nodes(double lo, double hi) {
  std::vector<double> nodes{lo};
  const int last = kUniformNodes - 1;
  const int first = static_cast<int>(std::floor(lo * last)) + 1;
  for (int i = first; i < last; ++i) {
    const double r = static_cast<double>(i) / last;
    if (r >= hi - kSnap) break;
    if (r > lo + kSnap) nodes.push_back(r);
  }
  nodes.push_back(hi);
  return nodes;
}

}  // namespace

ShotResult shoot(const RadialProfile& profile, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("trial eigenvalue must be positive");
  const int n = profile.dim().value();
  const auto& layers = profile.layers();

  std::vector<DenseCurve::Piece> pieces;
  pieces.reserve(layers.size());
  State s{1.0, 0.0};
  double h = 1e-7;
  double inner = 0.0;
  int sign_changes = 0;
  double last_sign_value = 1.0;

  for (std::size_t j = 0; j < layers.size(); ++j) {
    const double sigma = profile.conductivity(layers[j].material);
    const LayerOde ode{n, lambda / sigma};
    if (j > 0) s.p *= profile.conductivity(layers[j - 1].material) / sigma;

    DenseCurve::Piece piece;
    const std::vector<double> nodes = layer_nodes(inner, layers[j].r_outer);
    piece.reserve(nodes.size() + 1);
    piece.push_back({nodes.front(), s.y, s.p, ode.curvature(nodes.front(), s)});

    double r = nodes.front();
    if (j == 0) {
      // Leave the regular singular point on the two-term series.
      const double eps = std::min(kStartRadius, 0.25 * layers[0].r_outer);
      s = {1.0 - ode.k * eps * eps / (2.0 * n), -ode.k * eps / n};
      r = eps;
      piece.push_back({r, s.y, s.p, ode.curvature(r, s)});
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      if (nodes[i] <= r) continue;
      s = advance(ode, r, nodes[i], s, h);
      r = nodes[i];
      piece.push_back({r, s.y, s.p, ode.curvature(r, s)});
      if (r < 1.0 && s.y != 0.0) {
        if ((s.y < 0.0) != (last_sign_value < 0.0)) ++sign_changes;
        last_sign_value = s.y;
      }
    }
    pieces.push_back(std::move(piece));
    inner = layers[j].r_outer;
  }
  return {s.y, sign_changes, DenseCurve(std::move(pieces))};
}

std::vector<EigenSample> EigenSolution::samples() const {
  std::vector<EigenSample> out;
  const auto& layers = profile.layers();
  for (std::size_t j = 0; j < curve.pieces().size(); ++j) {
    const double sigma = profile.conductivity(layers[j].material);
    for (const CurveNode& node : curve.pieces()[j])
      out.push_back({node.r, node.value, node.slope, sigma});
  }
  return out;
}

EigenSolution principal_eigenvalue(const RadialProfile& profile, double tol) {
  if (!(tol >= 1e-12)) throw std::invalid_argument("eigenvalue tolerance must be >= 1e-12");
  const double mu = special::bessel_zero(profile.dim().bessel_order(), 1);
  double lo = profile.alpha() * mu * mu * (1.0 - 1e-6);
  double hi = profile.beta() * mu * mu * (1.0 + 1e-6);

  // Sturm comparison: below the principal eigenvalue y stays positive on
  // (0, 1]; above it y has a zero there.
  auto past_principal = [](const ShotResult& shot) {
    return shot.boundary_value <= 0.0 || shot.interior_sign_changes > 0;
  };
  ShotResult shot_lo = shoot(profile, lo);
  ShotResult shot_hi = shoot(profile, hi);
  if (past_principal(shot_lo) || !past_principal(shot_hi))
    throw SolverError("principal eigenvalue is not bracketed by [alpha mu^2, beta mu^2]");

  while (hi - lo > 1e-4 * hi) {
    const double mid = 0.5 * (lo + hi);
    ShotResult shot = shoot(profile, mid);
    if (past_principal(shot)) {
      hi = mid;
      shot_hi = std::move(shot);
    } else {
      lo = mid;
      shot_lo = std::move(shot);
    }
  }

  // Illinois regula falsi on y(1; lambda), bisecting every third step.
  double f_lo = shot_lo.boundary_value;
  double f_hi = shot_hi.boundary_value;
  if (f_hi > 0.0) throw SolverError("boundary value has no sign change in the final bracket");
  int side = 0;
  int iteration = 0;
  while (hi - lo > tol * hi && f_hi != 0.0) {
    if (++iteration > 300) throw SolverError("eigenvalue search did not converge");
    double x = (iteration % 3 == 0) ? 0.5 * (lo + hi) : (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    const double fx = shoot(profile, x).boundary_value;
    if (fx > 0.0) {
      lo = x;
      f_lo = fx;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = fx;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
  }
  double lambda = f_hi == 0.0 ? hi : 0.5 * (lo + hi);

  ShotResult final_shot = shoot(profile, lambda);
  if (final_shot.interior_sign_changes > 0)
    throw SolverError("eigenfunction changes sign inside the ball; not the ground state");
  EigenSolution sol{profile, lambda, std::move(final_shot.curve)};
  const double norm2 = l2_norm_squared(sol);
  if (!(norm2 > 0.0)) throw SolverError("eigenfunction has zero norm");
  sol.curve.scale(1.0 / std::sqrt(norm2));
  return sol;
}

double l2_norm_squared(const EigenSolution& sol) {
  const Dimension dim = sol.profile.dim();
  return sol.curve.integrate(
      [&](double r, double y, double) { return y * y * radial_weight(dim, r); });
}

double rayleigh_quotient(const RadialProfile& profile, const EigenSolution& sol) {
  if (!(profile.dim() == sol.profile.dim()))
    throw std::invalid_argument("profile and solution dimensions differ");
  const Dimension dim = profile.dim();
  const std::vector<double> breaks = profile.interfaces();
  return sol.curve.integrate(
      [&](double r, double, double dy) {
        return profile.conductivity_at(r) * dy * dy * radial_weight(dim, r);
      },
      breaks);
}

double gradient_magnitude(const EigenSolution& sol, double r, Side side) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("radius must lie in [0, 1]");
  if (r == 0.0) return 0.0;
  return std::abs(sol.curve.slope(r, side));
}

}  // namespace tpc
