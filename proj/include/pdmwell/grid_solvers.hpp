#pragma once

#include <utility>
#include <vector>

#include "pdmwell/ordering.hpp"
#include "pdmwell/well_geometry.hpp"

namespace pdmwell {

// Uniform grid including both Dirichlet boundary nodes.
struct GridSpec {
  double lo = -1.0;
  double hi = 1.0;
  int points = 3;
  double spacing() const { return (hi - lo) / (points - 1); }
};

// Symmetric grid [-half_span, half_span]; points must be odd and >= 3.
GridSpec symmetric_grid(double half_span, int points);

// Matching coarse/fine pair inside the well for Richardson extrapolation:
// both spans stop ten coarse spacings short of the walls, and the fine grid
// halves the spacing on the same span.
std::pair<GridSpec, GridSpec> x_grid_pair(const WellSpec& w, int coarse_points);

struct SolveOptions {
  // When set, the solve is repeated on a doubled grid (same span) and any
  // eigenvalue drifting by more than grid_shift_tol * mu^2 raises
  // GridTooCoarse.
  bool verify_grid = true;
  double grid_shift_tol = 1e-4;
};

struct EigenResult {
  std::vector<double> energies;               // ascending
  std::vector<std::vector<double>> vectors;   // grid-sized, boundary zeros,
                                              // unit trapezoid norm
  GridSpec grid;
};

// Finite-difference eigensolve of the mapped problem on [-Q, Q] with
// Dirichlet ends.  Returned energies are mapped-problem eigenvalues (the
// constant mu^2 * shift_coefficient is already subtracted from the raw
// operator spectrum).  Requires a defined depth parameter, a symmetric span
// with Q >= 8 L, an odd point count, and 1 <= k_levels <= points - 2.
EigenResult solve_q_space(const Couplings& c, const WellSpec& w,
                          const GridSpec& g, int k_levels,
                          const SolveOptions& opts = {});

// Self-adjoint finite-difference eigensolve of the position-dependent-mass
// operator on a symmetric span inside the well.  The span must stop at
// least ten spacings short of each wall.  Energies approximate the well
// spectrum directly.
EigenResult solve_x_space(const OrderingParams& o, const WellSpec& w,
                          const GridSpec& g, int k_levels,
                          const SolveOptions& opts = {});

// Richardson extrapolation over a 2:1 grid pair with identical spans.
// Vectors and grid are carried over from the fine result.
EigenResult refine(const EigenResult& coarse, const EigenResult& fine,
                   int richardson_order = 2);

struct ScatterOptions {
  double q_max = 0.0;  // 0: use 12/mu; explicit values must be >= 12/mu
  double step = 0.0;   // 0: use min(0.001/mu, 0.01/k)
};

struct ScatterResult {
  double k = 0.0;
  double reflection_prob = 0.0;
  double transmission_prob = 0.0;
};

// Plane-wave reflection/transmission off the mapped sech^2 well at
// wavenumber k > 0, by Runge-Kutta integration from the transmitted side.
// Throws NumericalInstability when |R + T - 1| exceeds 1e-6.
ScatterResult reflection(const Couplings& c, const WellSpec& w, double k,
                         const ScatterOptions& opts = {});

}  // namespace pdmwell
