#include "tpc/radial_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tpc/special_functions.hpp"

namespace tpc {

Dimension::Dimension(int n) : n_(n) {
  if (n < 2)
    throw std::domain_error("dimension n must be >= 2, got " + std::to_string(n));
}

double unit_ball_volume(Dimension dim) {
  const int n = dim.value();
  return std::pow(std::numbers::pi, 0.5 * n) / special::gamma_half(n + 2);
}

double radial_weight(Dimension dim, double r) {
  const int n = dim.value();
  return n * unit_ball_volume(dim) * std::pow(r, n - 1);
}

RadialSet::RadialSet(Dimension dim, std::vector<Interval> intervals) : dim_(dim) {
  for (const Interval& iv : intervals) {
    if (!(iv.lo >= 0.0) || !(iv.hi <= 1.0) || !(iv.lo <= iv.hi))
      throw std::invalid_argument("radial interval [" + std::to_string(iv.lo) + ", " +
                                  std::to_string(iv.hi) + "] is not inside [0, 1]");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const Interval& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  for (const Interval& iv : merged)
    if (iv.width() >= kSliverWidth) intervals_.push_back(iv);
}

RadialSet RadialSet::ball(Dimension dim, double radius) {
  return RadialSet(dim, {{0.0, radius}});
}

bool RadialSet::contains(double r) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [r](const Interval& iv) { return iv.lo <= r && r <= iv.hi; });
}

double RadialSet::measure() const {
  const int n = dim_.value();
  double sum = 0.0;
  for (const Interval& iv : intervals_) sum += std::pow(iv.hi, n) - std::pow(iv.lo, n);
  return unit_ball_volume(dim_) * sum;
}

RadialSet RadialSet::complement() const {
  std::vector<Interval> out;
  double cursor = 0.0;
  for (const Interval& iv : intervals_) {
    if (iv.lo > cursor) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < 1.0) out.push_back({cursor, 1.0});
  return RadialSet(dim_, std::move(out));
}

bool RadialSet::is_centered_ball() const {
  return intervals_.size() == 1 && intervals_[0].lo == 0.0 && intervals_[0].hi < 1.0;
}

bool RadialSet::touches_boundary() const {
  return !intervals_.empty() && intervals_.back().hi == 1.0;
}

double set_measure(const RadialSet& set) { return set.measure(); }

double intersection_measure(const RadialSet& a, const RadialSet& b) {
  if (!(a.dim() == b.dim()))
    throw std::invalid_argument("radial sets of different dimensions");
  std::vector<Interval> common;
  std::size_t i = 0, j = 0;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  while (i < x.size() && j < y.size()) {
    const double lo = std::max(x[i].lo, y[j].lo);
    const double hi = std::min(x[i].hi, y[j].hi);
    if (lo < hi) common.push_back({lo, hi});
    if (x[i].hi < y[j].hi) ++i; else ++j;
  }
  const int n = a.dim().value();
  double sum = 0.0;
  for (const Interval& iv : common) sum += std::pow(iv.hi, n) - std::pow(iv.lo, n);
  return unit_ball_volume(a.dim()) * sum;
}

double symmetric_difference_measure(const RadialSet& a, const RadialSet& b) {
  const double d = a.measure() + b.measure() - 2.0 * intersection_measure(a, b);
  return std::max(d, 0.0);
}

VolumeSpec::VolumeSpec(Dimension dim, double measure) : dim_(dim), measure_(measure) {
  const double total = unit_ball_volume(dim);
  if (!(measure > 0.0) || !(measure < total))
    throw std::domain_error("volume A = " + std::to_string(measure) +
                            " must lie in (0, omega_n) = (0, " + std::to_string(total) + ")");
}

VolumeSpec VolumeSpec::from_fraction(Dimension dim, double fraction) {
  if (!(fraction > 0.0) || !(fraction < 1.0))
    throw std::domain_error("volume fraction must lie in (0, 1), got " +
                            std::to_string(fraction));
  return VolumeSpec(dim, fraction * unit_ball_volume(dim));
}

double VolumeSpec::fraction() const { return measure_ / unit_ball_volume(dim_); }

double ball_radius_for_volume(const VolumeSpec& spec) {
  return std::pow(spec.fraction(), 1.0 / spec.dim().value());
}

}  // namespace tpc
