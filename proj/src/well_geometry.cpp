#include "pdmwell/well_geometry.hpp"

#include <cmath>

namespace pdmwell {

namespace {
constexpr double kWallGuard = 1e-14;  // exclusion band, units of L

void require_inside(const WellSpec& w, double x) {
  if (!inside_well(w, x)) throw OutsideDomain("position is at or beyond the well walls");
}
}  // namespace

bool inside_well(const WellSpec& w, double x) {
  if (!std::isfinite(x)) return false;
  return std::abs(x) < w.half_width * (1.0 - kWallGuard);
}

MassPoint mass_at(const WellSpec& w, double x) {
  require_inside(w, x);
  const double L = w.half_width;
  const double s = x / L;
  // (1-s)(1+s) stays exact where 1 - s*s would cancel near the walls
  const double u = (1.0 - s) * (1.0 + s);
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double u4 = u3 * u;
  MassPoint p;
  p.x = x;
  p.m = 1.0 / u2;
  p.m1 = 4.0 * s / (L * u3);
  p.m2 = 4.0 / (L * L * u3) + 24.0 * s * s / (L * L * u4);
  return p;
}

double q_of_x(const WellSpec& w, double x) {
  require_inside(w, x);
  return w.half_width * std::atanh(x / w.half_width);
}

double x_of_q(const WellSpec& w, double q) {
  return w.half_width * std::tanh(q / w.half_width);
}

double v_tilde(const WellSpec& w, const OrderingParams& o, double x) {
  const MassPoint p = mass_at(w, x);
  const double m2_over_m2 = p.m2 / (p.m * p.m);
  const double m1sq_over_m3 = p.m1 * p.m1 / (p.m * p.m * p.m);
  const double a = o.alpha;
  const double b = o.beta;
  return 0.5 * (1.0 + b) * m2_over_m2 - (a * (a + b + 1.0) + b + 1.0) * m1sq_over_m3;
}

double v_eff_from_mass(const WellSpec& w, const Couplings& c, double q) {
  const double mu = w.mu;
  const double s = std::tanh(mu * q);
  double m2_over_m2, m1sq_over_m3;
  if (std::abs(s) < 1.0 - 1e-12) {
    const MassPoint p = mass_at(w, w.half_width * s);
    m2_over_m2 = p.m2 / (p.m * p.m);
    m1sq_over_m3 = p.m1 * p.m1 / (p.m * p.m * p.m);
  } else {
    // x_of_q saturates onto the wall in floating point out here; form the
    // same derivative ratios from sech^2 instead, which underflows cleanly.
    const double ch = std::cosh(mu * q);
    const double u = 1.0 / (ch * ch);
    m2_over_m2 = mu * mu * (4.0 * u + 24.0 * s * s);
    m1sq_over_m3 = mu * mu * 16.0 * s * s;
  }
  return c.g1 * m2_over_m2 - c.g2 * m1sq_over_m3;
}

double v_eff_closed(const WellSpec& w, const Couplings& c, double q) {
  if (!c.lambda) throw LambdaUndefined("v_eff_closed: lambda is undefined for these couplings");
  const double lambda = *c.lambda;
  const double mu = w.mu;
  const double sech = 1.0 / std::cosh(mu * q);
  return mu * mu * (c.shift_coefficient - lambda * (lambda - 1.0) * sech * sech);
}

double pull_back(const WellSpec& w, const std::function<double(double)>& phi, double x) {
  const MassPoint p = mass_at(w, x);
  return std::pow(p.m, 0.25) * phi(q_of_x(w, x));
}

}  // namespace pdmwell
