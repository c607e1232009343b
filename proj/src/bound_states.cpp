#include "pdmwell/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "pdmwell/errors.hpp"
#include "pdmwell/hyp2f1.hpp"
#include "pdmwell/quadrature.hpp"

namespace pdmwell {
namespace {

// Below this |mu q| the profile is evaluated through eval_2f1 in the
// variable -sinh^2(mu q); beyond it that variable overflows long before the
// wavefunction itself decays, so the same terminating polynomial is summed
// in tanh^2 with a log-scaled sech prefactor.  The two expressions are the
// same function exactly (Pfaff transformation of a terminating series); the
// threshold keeps the series intermediates finite for lambda up to ~12.
constexpr double kFormSwitch = 30.0;

// log(sech y) without overflow for any y.
double log_sech(double y) {
  const double a = std::abs(y);
  return std::log(2.0) - a - std::log1p(std::exp(-2.0 * a));
}

// Terminating Gauss series sum_{k<=degree} of (a)_k (b)_k / ((c)_k k!) w^k.
// Used only for the tanh^2 rearrangement where w lies in [0, 1).
double terminating_poly(double a, double b, double c, int degree, double w) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < degree; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * w;
    sum += term;
  }
  return sum;
}

// Unnormalized mapped-problem profile as a function of y = mu q.
double profile(int n, double lambda, Parity parity, double y) {
  const double kappa = lambda - 1.0 - n;
  if (std::abs(y) <= kFormSwitch) {
    const double sh = std::sinh(y);
    const double z = -sh * sh;
    const double pref = std::pow(std::cosh(y), 1.0 - lambda);
    if (parity == Parity::kEven) {
      const HypParams p{-0.5 * n, 0.5 * (n + 2.0 - 2.0 * lambda), 0.5};
      return pref * eval_2f1(p, z);
    }
    const HypParams p{0.5 * (1.0 - n), 0.5 * (n + 3.0 - 2.0 * lambda), 1.5};
    return pref * sh * eval_2f1(p, z);
  }
  const double t = std::tanh(y);
  const double w = t * t;
  const double pref = std::exp(kappa * log_sech(y));
  if (parity == Parity::kEven) {
    const int degree = n / 2;
    return pref * terminating_poly(-0.5 * n, lambda - 0.5 * (n + 1.0), 0.5,
                                   degree, w);
  }
  const int degree = (n - 1) / 2;
  return pref * t *
         terminating_poly(-0.5 * (n - 1.0), lambda - 0.5 * n, 1.5, degree, w);
}

void require_inside(const WellSpec& w, double x) {
  if (!inside_well(w, x))
    throw OutsideDomain("position is at or beyond the well walls");
}

}  // namespace

BoundState make_bound_state(const Couplings& c, const WellSpec& w, int n) {
  if (!c.lambda)
    throw NoSuchLevel("depth parameter undefined: no discrete levels");
  const double lambda = *c.lambda;
  if (n < 0 || !(n < lambda - 1.0))
    throw NoSuchLevel("level index outside 0 <= n < lambda - 1");

  BoundState s;
  s.n = n;
  s.lambda = lambda;
  s.mu = w.mu;
  s.parity = (n % 2 == 0) ? Parity::kEven : Parity::kOdd;
  const double kappa = lambda - 1.0 - n;
  s.ref_energy = -w.mu * w.mu * kappa * kappa;
  s.target_energy = s.ref_energy + w.mu * w.mu * c.shift_coefficient;
  s.hyp_a = 0.5 * (1.0 + n);
  s.hyp_b = lambda - 0.5 * (1.0 + n);

  // The series route must terminate at the polynomial degree of the level.
  const int expected = (s.parity == Parity::kEven) ? n / 2 : (n - 1) / 2;
  const HypParams series =
      (s.parity == Parity::kEven)
          ? HypParams{-0.5 * n, 0.5 * (n + 2.0 - 2.0 * lambda), 0.5}
          : HypParams{0.5 * (1.0 - n), 0.5 * (n + 3.0 - 2.0 * lambda), 1.5};
  const auto degree = is_terminating(series);
  if (!degree || *degree != expected)
    throw NumericalInstability("closed-form series failed to terminate");

  // Unit L2 norm on the line; the tail beyond the cutoff is ~exp(-40).
  const double big = 20.0 / kappa + 20.0;
  const auto density = [&](double y) {
    const double p = profile(n, lambda, s.parity, y);
    return p * p;
  };
  const double integral =
      w.half_width * panelled_symmetric_integral(density, big, 1.0);
  s.norm = 1.0 / std::sqrt(integral);
  return s;
}

double phi_n(const BoundState& s, double q) {
  return s.norm * profile(s.n, s.lambda, s.parity, s.mu * q);
}

double psi_n(const BoundState& s, const WellSpec& w, double x) {
  return pull_back(w, [&](double q) { return phi_n(s, q); }, x);
}

double psi_direct(const BoundState& s, const WellSpec& w, double x) {
  require_inside(w, x);
  const double sx = x / w.half_width;
  const double u = (1.0 - sx) * (1.0 + sx);
  const double z = -(sx * sx) / u;
  const double pref = std::pow(u, -0.5 * (s.lambda + 1.0));
  double value;
  if (s.parity == Parity::kEven) {
    value = pref * eval_2f1({s.hyp_a, s.hyp_b, 0.5}, z);
  } else {
    value = pref * (sx / std::sqrt(u)) *
            eval_2f1({s.hyp_a + 0.5, s.hyp_b + 0.5, 1.5}, z);
  }
  return s.norm * value;
}

double ground_state_closed(const Couplings& c, const WellSpec& w, double x) {
  if (!c.lambda || !(*c.lambda > 1.0))
    throw NoSuchLevel("ground state requires depth parameter above 1");
  require_inside(w, x);
  const double lambda = *c.lambda;
  const double big = 20.0 / (lambda - 1.0) + 20.0;
  const auto density = [&](double y) {
    return std::exp((2.0 * lambda - 2.0) * log_sech(y));
  };
  const double integral =
      w.half_width * panelled_symmetric_integral(density, big, 1.0);
  const double a0 = 1.0 / std::sqrt(integral);
  const double sx = x / w.half_width;
  const double u = (1.0 - sx) * (1.0 + sx);
  return a0 * std::pow(u, 0.5 * (lambda - 2.0));
}

bool boundary_check(const BoundState& s, const WellSpec& w) {
  constexpr double kEps[] = {1e-2, 1e-4, 1e-6, 1e-8};
  double prev = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (const double eps : kEps) {
    const double edge = w.half_width * (1.0 - eps);
    const double v =
        std::max(std::abs(psi_n(s, w, edge)), std::abs(psi_n(s, w, -edge)));
    // Strict decrease with a relative margin so that a level that is exactly
    // flat at the walls cannot pass on rounding noise.
    decreasing = decreasing && (v < prev * (1.0 - 1e-12));
    prev = v;
  }
  return decreasing;
}

WavefunctionTable tabulate(const BoundState& s, const WellSpec& w, Space space,
                           int points, double extent) {
  if (points < 2) throw std::invalid_argument("tabulate needs >= 2 points");
  if (!(extent > 0.0) || !std::isfinite(extent))
    throw std::invalid_argument("tabulate extent must be positive");
  if (space == Space::kX && !inside_well(w, extent))
    throw OutsideDomain("tabulate extent reaches the well walls");

  WavefunctionTable table;
  table.space = space;
  table.abscissae.reserve(points);
  table.values.reserve(points);
  const double step = 2.0 * extent / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double a = (i == points - 1) ? extent : -extent + i * step;
    table.abscissae.push_back(a);
    table.values.push_back(space == Space::kX ? psi_n(s, w, a) : phi_n(s, a));
  }
  return table;
}

}  // namespace pdmwell
