#pragma once

#include <array>
#include <span>
#include <vector>

namespace tpc {

/// Which one-sided limit to take at a material interface.
enum class Side { left, right };

/// Sampled radial function with its first and second derivative.
struct CurveNode {
  double r = 0.0;
  double value = 0.0;
  double slope = 0.0;
  double curvature = 0.0;
};

/// A piecewise-smooth radial function on [0, 1]. Each piece covers one
/// material layer, so the derivative may jump between pieces but never
/// inside one. Values use cubic Hermite interpolation on (value, slope),
/// derivatives on (slope, curvature).
class DenseCurve {
 public:
  using Piece = std::vector<CurveNode>;

  DenseCurve() = default;
  /// Pieces must be contiguous, start at r = 0 and end at r = 1, and each
  /// must hold at least two strictly increasing nodes.
  explicit DenseCurve(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

  double value(double r, Side side = Side::left) const;
  double slope(double r, Side side = Side::left) const;

  void scale(double factor);

  /// Integral over [0, 1] of f(r, value, slope), using 5-point
  /// Gauss-Legendre on every segment. Segments are split at `breaks` so an
  /// integrand with jumps there is integrated piecewise smoothly.
  template <class F>
  double integrate(F&& f, std::span<const double> breaks = {}) const;

 private:
  struct Located {
    const Piece* piece;
    std::size_t index;  // segment [index, index + 1]
  };
  Located locate(double r, Side side) const;

  std::vector<Piece> pieces_;
};

/// Cubic Hermite interpolation on [a, b].
inline double hermite(double a, double b, double fa, double fb, double da, double db,
                      double x) {
  const double h = b - a;
  const double s = (x - a) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * fa + (s3 - 2 * s2 + s) * h * da +
         (-2 * s3 + 3 * s2) * fb + (s3 - s2) * h * db;
}

template <class F>
double DenseCurve::integrate(F&& f, std::span<const double> breaks) const {
  static constexpr std::array<double, 5> nodes = {
      -0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
      0.9061798459386640};
  static constexpr std::array<double, 5> weights = {
      0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
      0.2369268850561891};

  double total = 0.0;
  std::vector<double> cuts;
  for (const Piece& piece : pieces_) {
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      const CurveNode& p = piece[i];
      const CurveNode& q = piece[i + 1];
      cuts.assign({p.r});
      for (double b : breaks)
        if (b > p.r && b < q.r) cuts.push_back(b);
      cuts.push_back(q.r);
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double lo = cuts[c];
        const double hi = cuts[c + 1];
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double sum = 0.0;
        for (std::size_t g = 0; g < nodes.size(); ++g) {
          const double x = mid + half * nodes[g];
          const double y = hermite(p.r, q.r, p.value, q.value, p.slope, q.slope, x);
          const double dy =
              hermite(p.r, q.r, p.slope, q.slope, p.curvature, q.curvature, x);
          sum += weights[g] * f(x, y, dy);
        }
        total += half * sum;
      }
    }
  }
  return total;
}

}  // namespace tpc
