#pragma once

#include <cmath>
#include <functional>

#include "pdmwell/errors.hpp"
#include "pdmwell/ordering.hpp"

namespace pdmwell {

// Infinite well on (-L, L) holding the singular mass profile
// m(x) = 1 / (1 - (x/L)^2)^2, with m0 = 1 and mu = 1/L.
struct WellSpec {
  double half_width = 1.0;
  double mu = 1.0;

  explicit WellSpec(double L) {
    if (!(L > 0.0) || !std::isfinite(L))
      throw InvalidScale("WellSpec: half-width must be positive and finite");
    half_width = L;
    mu = 1.0 / L;
  }
};

struct MassPoint {
  double x = 0.0;
  double m = 0.0;
  double m1 = 0.0;  // dm/dx
  double m2 = 0.0;  // d^2m/dx^2
};

// True when x is usable: strictly inside the well and outside the guard band
// of width 1e-14 * L next to each wall.
bool inside_well(const WellSpec& w, double x);

MassPoint mass_at(const WellSpec& w, double x);

// Coordinate map q(x) = L atanh(x/L) and its inverse x(q) = L tanh(q/L).
double q_of_x(const WellSpec& w, double x);
double x_of_q(const WellSpec& w, double q);

// Ordering-dependent effective potential of the self-adjoint position-space
// problem (zero well potential added inside the walls).
double v_tilde(const WellSpec& w, const OrderingParams& o, double x);

// Effective potential of the mapped constant-mass problem, evaluated through
// the mass-derivative ratios g1 m''/m^2 - g2 m'^2/m^3 at x = x_of_q(q).
double v_eff_from_mass(const WellSpec& w, const Couplings& c, double q);

// Same potential in closed form:
// -lambda(lambda-1) mu^2 / cosh^2(mu q) + mu^2 shift_coefficient.
double v_eff_closed(const WellSpec& w, const Couplings& c, double q);

// Maps a mapped-problem profile back to the well: m(x)^{1/4} phi(q(x)).
double pull_back(const WellSpec& w, const std::function<double(double)>& phi, double x);

}  // namespace pdmwell
