#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace pdmwell {

namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h6 = (b - a) / 12.0;
  const double left = h6 * (fa + 4.0 * flm + fm);
  const double right = h6 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature; tol is an absolute error target.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Integral over [-big, big] of a decaying integrand whose features live at
// scale `scale` around the origin.  Dyadic panels seed the adaptivity so a
// narrow central feature cannot slip between the samples of one huge
// interval, and a coarse composite pass fixes the magnitude that the
// absolute per-panel tolerances are scaled to.
template <class F>
double panelled_symmetric_integral(F&& f, double big, double scale) {
  std::vector<double> edges{0.0};
  double e = scale;
  while (e < big) {
    edges.push_back(e);
    e *= 2.0;
  }
  if (edges.back() < big) edges.push_back(big);
  std::vector<double> full;
  full.reserve(2 * edges.size() - 1);
  for (std::size_t i = edges.size(); i-- > 1;) full.push_back(-edges[i]);
  for (const double x : edges) full.push_back(x);

  // The tolerance scales with the unsigned mass so that integrals that
  // cancel to ~0 (odd integrands) keep a sane absolute target.
  double rough_abs = 0.0;
  for (std::size_t i = 0; i + 1 < full.size(); ++i) {
    const double a = full[i], b = full[i + 1];
    const int steps = 128;
    const double h = (b - a) / steps;
    double acc = std::abs(f(a)) + std::abs(f(b));
    for (int k = 1; k < steps; ++k)
      acc += std::abs(f(a + k * h)) * ((k % 2) ? 4.0 : 2.0);
    rough_abs += acc * h / 3.0;
  }

  const double panel_tol =
      std::max(rough_abs, 1e-280) * 1e-12 / static_cast<double>(full.size());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < full.size(); ++i)
    total += adaptive_simpson(f, full[i], full[i + 1], panel_tol);
  return total;
}

}  // namespace pdmwell
