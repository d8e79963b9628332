#pragma once

#include <string_view>
#include <vector>

#include "tpc/dense_curve.hpp"
#include "tpc/radial_geometry.hpp"

namespace tpc {

enum class Material { low, high };

std::string_view to_string(Material m);
/// Parses "low" / "high"; throws std::invalid_argument otherwise.
Material material_from_string(std::string_view s);

struct Layer {
  double r_outer;
  Material material;
  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Profiles never hold more than this many layers.
inline constexpr std::size_t kMaxLayers = 64;

/// Piecewise-constant radial conductivity sigma = beta on the high region
/// and alpha elsewhere. Layers are listed from the center outwards by their
/// outer radius; the last one ends at r = 1. Adjacent layers with the same
/// material are merged on construction.
class RadialProfile {
 public:
  /// Requires 0 < alpha <= beta (alpha == beta is the homogeneous medium),
  /// strictly increasing radii in (0, 1] and a final radius of exactly 1.
  RadialProfile(Dimension dim, double alpha, double beta, std::vector<Layer> layers);

  static RadialProfile homogeneous(Dimension dim, double conductivity);
  /// High material on `high`, low material on its complement. Layers that
  /// would exceed kMaxLayers are merged, narrowest first.
  static RadialProfile from_high_region(double alpha, double beta, const RadialSet& high);

  Dimension dim() const noexcept { return dim_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }

  double conductivity(Material m) const noexcept { return m == Material::high ? beta_ : alpha_; }
  double conductivity_at(double r, Side side = Side::left) const;

  /// Interior interface radii (excluding r = 1).
  std::vector<double> interfaces() const;
  RadialSet high_region() const;
  double high_measure() const { return high_region().measure(); }

  /// Same layers with both conductivities multiplied by c > 0.
  RadialProfile scaled(double c) const;

  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;

 private:
  Dimension dim_;
  double alpha_;
  double beta_;
  std::vector<Layer> layers_;
};

}  // namespace tpc
