#pragma once

#include <vector>

namespace tpc {

/// Spatial dimension of the unit ball; n >= 2.
class Dimension {
 public:
  explicit Dimension(int n);
  int value() const noexcept { return n_; }
  /// Bessel order n/2 - 1 of the radial ground state.
  double bessel_order() const noexcept { return 0.5 * n_ - 1.0; }
  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

/// omega_n = pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(Dimension dim);

/// n * omega_n * r^{n-1}: the radial density of Lebesgue measure.
double radial_weight(Dimension dim, double r);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intervals narrower than this are dropped when a RadialSet is normalized.
inline constexpr double kSliverWidth = 1e-12;

/// A radially symmetric subset of the unit ball stored as sorted, disjoint
/// radial intervals in [0, 1].
class RadialSet {
 public:
  explicit RadialSet(Dimension dim) : dim_(dim) {}

  /// Sorts, merges overlapping or touching intervals and drops slivers.
  /// Throws std::invalid_argument for intervals outside [0, 1] or with
  /// lo > hi.
  RadialSet(Dimension dim, std::vector<Interval> intervals);

  static RadialSet ball(Dimension dim, double radius);

  Dimension dim() const noexcept { return dim_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(double r) const;

  double measure() const;
  RadialSet complement() const;

  /// True for a single interval [0, r] with r < 1.
  bool is_centered_ball() const;
  /// True when the last interval ends at r = 1.
  bool touches_boundary() const;

  friend bool operator==(const RadialSet&, const RadialSet&) = default;

 private:
  Dimension dim_;
  std::vector<Interval> intervals_;
};

double set_measure(const RadialSet& set);

/// Measure of the symmetric difference of two sets of the same dimension.
double symmetric_difference_measure(const RadialSet& a, const RadialSet& b);

/// Measure of the intersection of two sets of the same dimension.
double intersection_measure(const RadialSet& a, const RadialSet& b);

/// Volume constraint 0 < A < omega_n for the high-conductivity region.
class VolumeSpec {
 public:
  VolumeSpec(Dimension dim, double measure);
  static VolumeSpec from_fraction(Dimension dim, double fraction);

  Dimension dim() const noexcept { return dim_; }
  double measure() const noexcept { return measure_; }
  double fraction() const;

 private:
  Dimension dim_;
  double measure_;
};

/// rho = (A / omega_n)^{1/n}.
double ball_radius_for_volume(const VolumeSpec& spec);

}  // namespace tpc
