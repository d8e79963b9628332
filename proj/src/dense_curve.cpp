#include "tpc/dense_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpc {

DenseCurve::DenseCurve(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("dense curve needs at least one piece");
  double expected_start = 0.0;
  for (const Piece& piece : pieces_) {
    if (piece.size() < 2) throw std::invalid_argument("curve piece needs two nodes");
    if (piece.front().r != expected_start)
      throw std::invalid_argument("curve pieces are not contiguous");
    for (std::size_t i = 0; i + 1 < piece.size(); ++i)
      if (!(piece[i + 1].r > piece[i].r))
        throw std::invalid_argument("curve nodes must be strictly increasing");
    expected_start = piece.back().r;
  }
  if (expected_start != 1.0) throw std::invalid_argument("curve must end at r = 1");
}

DenseCurve::Located DenseCurve::locate(double r, Side side) const {
  r = std::clamp(r, 0.0, 1.0);
  // Left limits use pieces as (lo, hi], right limits as [lo, hi).
  auto it = std::find_if(pieces_.begin(), pieces_.end(), [&](const Piece& p) {
    return side == Side::left ? r <= p.back().r : r < p.back().r;
  });
  if (it == pieces_.end()) it = std::prev(pieces_.end());
  const Piece& piece = *it;
  auto upper = std::upper_bound(piece.begin(), piece.end(), r,
                                [](double v, const CurveNode& n) { return v < n.r; });
  std::size_t index = upper == piece.begin() ? 0 : static_cast<std::size_t>(upper - piece.begin()) - 1;
  index = std::min(index, piece.size() - 2);
  return {&piece, index};
}

double DenseCurve::value(double r, Side side) const {
  const auto [piece, i] = locate(r, side);
  const CurveNode& p = (*piece)[i];
  const CurveNode& q = (*piece)[i + 1];
  return hermite(p.r, q.r, p.value, q.value, p.slope, q.slope, std::clamp(r, 0.0, 1.0));
}

double DenseCurve::slope(double r, Side side) const {
  const auto [piece, i] = locate(r, side);
  const CurveNode& p = (*piece)[i];
  const CurveNode& q = (*piece)[i + 1];
  return hermite(p.r, q.r, p.slope, q.slope, p.curvature, q.curvature,
                 std::clamp(r, 0.0, 1.0));
}

void DenseCurve::scale(double factor) {
  for (Piece& piece : pieces_)
    for (CurveNode& node : piece) {
      node.value *= factor;
      node.slope *= factor;
      node.curvature *= factor;
    }
}

}  // namespace tpc
