#include "tpc/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tpc {

std::string_view to_string(Material m) { return m == Material::high ? "high" : "low"; }

Material material_from_string(std::string_view s) {
  if (s == "low") return Material::low;
  if (s == "high") return Material::high;
  throw std::invalid_argument("material must be \"low\" or \"high\", got \"" +
                              std::string(s) + "\"");
}

namespace {

std::vector<Layer> merge_same_material(const std::vector<Layer>& layers) {
  std::vector<Layer> out;
  for (const Layer& layer : layers) {
    if (!out.empty() && out.back().material == layer.material)
      out.back().r_outer = layer.r_outer;
    else
      out.push_back(layer);
  }
  return out;
}

}  // namespace

RadialProfile::RadialProfile(Dimension dim, double alpha, double beta, std::vector<Layer> layers)
    : dim_(dim), alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be positive and finite");
  if (!(beta >= alpha) || !std::isfinite(beta))
    throw std::invalid_argument("beta must be finite and >= alpha");
  if (layers.empty()) throw std::invalid_argument("layers: profile needs at least one layer");
  double previous = 0.0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (!(layers[i].r_outer > previous) || !(layers[i].r_outer <= 1.0))
      throw std::invalid_argument("layers[" + std::to_string(i) +
                                  "].r_outer must be strictly increasing within (0, 1]");
    previous = layers[i].r_outer;
  }
  if (layers.back().r_outer != 1.0)
    throw std::invalid_argument("layers[" + std::to_string(layers.size() - 1) +
                                "].r_outer must equal 1 for the last layer");
  layers_ = merge_same_material(layers);
}

RadialProfile RadialProfile::homogeneous(Dimension dim, double conductivity) {
  return RadialProfile(dim, conductivity, conductivity, {{1.0, Material::low}});
}

RadialProfile RadialProfile::from_high_region(double alpha, double beta, const RadialSet& high) {
  std::vector<Layer> layers;
  double cursor = 0.0;
  for (const Interval& iv : high.intervals()) {
    if (iv.lo > cursor) layers.push_back({iv.lo, Material::low});
    layers.push_back({iv.hi, Material::high});
    cursor = iv.hi;
  }
  if (cursor < 1.0) layers.push_back({1.0, Material::low});

  while (layers.size() > kMaxLayers) {
    // Flip the narrowest interior layer so it merges with both neighbours.
    std::size_t narrowest = 1;
    double width = 2.0;
    for (std::size_t i = 1; i + 1 < layers.size(); ++i) {
      const double w = layers[i].r_outer - layers[i - 1].r_outer;
      if (w < width) {
        width = w;
        narrowest = i;
      }
    }
    layers[narrowest].material = layers[narrowest - 1].material;
    layers = merge_same_material(layers);
  }
  return RadialProfile(high.dim(), alpha, beta, std::move(layers));
}

double RadialProfile::conductivity_at(double r, Side side) const {
  for (const Layer& layer : layers_) {
    if (side == Side::left ? r <= layer.r_outer : r < layer.r_outer)
      return conductivity(layer.material);
  }
  return conductivity(layers_.back().material);
}

std::vector<double> RadialProfile::interfaces() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < layers_.size(); ++i) out.push_back(layers_[i].r_outer);
  return out;
}

RadialSet RadialProfile::high_region() const {
  std::vector<Interval> intervals;
  double inner = 0.0;
  for (const Layer& layer : layers_) {
    if (layer.material == Material::high) intervals.push_back({inner, layer.r_outer});
    inner = layer.r_outer;
  }
  return RadialSet(dim_, std::move(intervals));
}

RadialProfile RadialProfile::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("conductivity scale must be positive");
  return RadialProfile(dim_, c * alpha_, c * beta_, layers_);
}

}  // namespace tpc
