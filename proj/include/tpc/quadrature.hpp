#pragma once

#include <cmath>

namespace tpc {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {

template <class F>
void simpson_step(F& f, double a, double b, double fa, double fm, double fb,
                  double whole, double tol, int depth, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth <= 0 || m <= a || b <= m) {
    if (depth <= 0 && std::abs(delta) > 15.0 * tol) out.converged = false;
    out.value += left + right + delta / 15.0;
    out.error_estimate += std::abs(delta) / 15.0;
    return;
  }
  simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
  simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive Simpson quadrature with Richardson correction. The absolute
/// tolerance is split between halves on each subdivision.
template <class F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double abs_tol,
                                  int max_depth = 48) {
  QuadratureResult out;
  if (a == b) return out;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, out);
  return out;
}

}  // namespace tpc
