#pragma once

#include <optional>
#include <vector>

#include "pdmwell/errors.hpp"

namespace pdmwell {

// Kinetic-operator ordering exponents of the position-dependent-mass
// Hamiltonian, constrained by alpha + beta + gamma = -1.
struct OrderingParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool heterojunction = false;  // alpha == gamma
};

// Potential couplings induced by an ordering.  lambda is the larger root of
// l(l-1) = 4(5 g1 - 4 g2) and is absent when the discriminant is negative.
// shift_coefficient is dimensionless; multiply by mu^2 for an energy.
struct Couplings {
  double g1 = 0.0;
  double g2 = 0.0;
  std::optional<double> lambda;
  double shift_coefficient = 0.0;
};

struct AdmissibilityVerdict {
  std::optional<double> lambda;
  bool admissible = false;   // lambda > 2, strictly
  int bound_state_count = 0; // number of integers n with 0 <= n < lambda - 1
};

// One discrete level: ref_energy is the eigenvalue of the mapped
// constant-mass problem, target_energy the eigenvalue of the mass well
// (they differ by the constant mu^2 * shift_coefficient).
struct EnergyLevel {
  int n = 0;
  double ref_energy = 0.0;
  double target_energy = 0.0;
};

OrderingParams make_ordering(double alpha, double beta, double gamma);

Couplings couplings(double alpha, double beta);

// Depth parameter on the heterojunction line beta = -1 - 2 alpha.
double lambda_heterojunction(double alpha);

AdmissibilityVerdict classify(double alpha, double beta);

// Number of integers n with 0 <= n < lambda - 1.
int bound_state_count(double lambda);

// All discrete levels for the given couplings, ascending in n.
// Empty when lambda <= 1.
std::vector<EnergyLevel> energy_levels(const Couplings& c, double mu);

}  // namespace pdmwell
