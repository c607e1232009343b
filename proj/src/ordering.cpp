#include "pdmwell/ordering.hpp"

#include <cmath>

namespace pdmwell {

namespace {
constexpr double kConstraintTol = 1e-12;
}

OrderingParams make_ordering(double alpha, double beta, double gamma) {
  if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma)))
    throw ConstraintViolation("ordering exponents must be finite");
  if (std::abs(alpha + beta + gamma + 1.0) > kConstraintTol)
    throw ConstraintViolation("ordering exponents must satisfy alpha + beta + gamma = -1");
  OrderingParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.heterojunction = std::abs(alpha - gamma) <= kConstraintTol;
  return p;
}

Couplings couplings(double alpha, double beta) {
  Couplings c;
  c.g1 = 0.25 * (1.0 + 2.0 * beta);
  c.g2 = alpha * (alpha + beta + 1.0) + beta + 9.0 / 16.0;
  c.shift_coefficient = 8.0 * (3.0 * c.g1 - 2.0 * c.g2);
  const double disc = 1.0 + 80.0 * c.g1 - 64.0 * c.g2;
  if (disc >= 0.0) c.lambda = 0.5 * (1.0 + std::sqrt(disc));
  return c;
}

double lambda_heterojunction(double alpha) {
  return 0.5 * (1.0 + std::abs(3.0 + 8.0 * alpha));
}

int bound_state_count(double lambda) {
  const double top = lambda - 1.0;
  if (!(top > 0.0)) return 0;
  return static_cast<int>(std::ceil(top));
}

AdmissibilityVerdict classify(double alpha, double beta) {
  const Couplings c = couplings(alpha, beta);
  AdmissibilityVerdict v;
  v.lambda = c.lambda;
  v.admissible = c.lambda.has_value() && *c.lambda > 2.0;
  v.bound_state_count = c.lambda ? bound_state_count(*c.lambda) : 0;
  return v;
}

std::vector<EnergyLevel> energy_levels(const Couplings& c, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw InvalidScale("energy_levels: mu must be positive and finite");
  if (!c.lambda) throw LambdaUndefined("energy_levels: lambda is undefined for these couplings");
  const double lambda = *c.lambda;
  const double mu2 = mu * mu;
  std::vector<EnergyLevel> levels;
  const int count = bound_state_count(lambda);
  levels.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    const double kappa = lambda - 1.0 - n;
    EnergyLevel lv;
    lv.n = n;
    lv.ref_energy = -mu2 * kappa * kappa;
    lv.target_energy = mu2 * (c.shift_coefficient - kappa * kappa);
    levels.push_back(lv);
  }
  return levels;
}

}  // namespace pdmwell
