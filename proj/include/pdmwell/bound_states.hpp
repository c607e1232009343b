#pragma once

#include <vector>

#include "pdmwell/ordering.hpp"
#include "pdmwell/well_geometry.hpp"

namespace pdmwell {

enum class Parity { kEven, kOdd };

// One discrete level of the mapped sech^2 problem, carrying its energies,
// the hypergeometric parameters of the closed form, and the multiplier that
// makes the mapped profile unit L2 norm on the line.
struct BoundState {
  int n = 0;
  double lambda = 0.0;
  double mu = 0.0;
  Parity parity = Parity::kEven;
  double ref_energy = 0.0;     // mapped-problem eigenvalue, -mu^2 (lambda-1-n)^2
  double target_energy = 0.0;  // ref_energy + mu^2 * shift_coefficient
  double hyp_a = 0.0;          // (1 + n) / 2
  double hyp_b = 0.0;          // lambda - (1 + n) / 2
  double norm = 1.0;
};

// Builds level n for an ordering with defined depth parameter.  Throws
// NoSuchLevel when the depth is undefined or n is outside 0 <= n < lambda-1.
BoundState make_bound_state(const Couplings& c, const WellSpec& w, int n);

// Normalized mapped-problem eigenfunction phi_n(q).  Finite for all q.
double phi_n(const BoundState& s, double q);

// Well eigenfunction psi_n(x) = m(x)^{1/4} phi_n(q(x)).  Throws
// OutsideDomain at or beyond the walls.
double psi_n(const BoundState& s, const WellSpec& w, double x);

// Same function through an independent route: the direct series in the
// variable z = s^2/(s^2-1) with s = x/L, no pass through the mapped
// coordinate.  Converges for |x| up to roughly 0.999 L; prefer psi_n for
// points closer to the walls.
double psi_direct(const BoundState& s, const WellSpec& w, double x);

// Closed-form normalized ground state A0 (1-(x/L)^2)^{(lambda-2)/2}.
// Requires lambda > 1; recomputes the normalization integral on each call.
double ground_state_closed(const Couplings& c, const WellSpec& w, double x);

// True when max(|psi_n(L(1-eps))|, |psi_n(-L(1-eps))|) strictly decreases
// along eps = 1e-2, 1e-4, 1e-6, 1e-8, i.e. the level dies out at the walls.
bool boundary_check(const BoundState& s, const WellSpec& w);

enum class Space { kX, kQ };

struct WavefunctionTable {
  Space space = Space::kX;
  std::vector<double> abscissae;  // strictly increasing
  std::vector<double> values;
};

// Uniform sampling of the level on [-extent, extent] in the requested
// coordinate.  For Space::kX the extent must stay inside the well.
WavefunctionTable tabulate(const BoundState& s, const WellSpec& w, Space space,
                           int points, double extent);

}  // namespace pdmwell
