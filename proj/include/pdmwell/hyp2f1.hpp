#pragma once

#include <optional>

#include "pdmwell/errors.hpp"

namespace pdmwell {

struct HypParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Degree of the terminating Gauss series when a or b is a nonpositive
// integer (within 1e-12); the smaller index wins when both qualify.
std::optional<int> is_terminating(const HypParams& p);

// Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 0.
//
// Terminating parameter sets are summed exactly (termination takes
// precedence over a nonpositive-integer c when it happens at or before the
// pole index).  Everything else goes through the Pfaff transformation
//   2F1(a, b; c; z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)),
// whose argument w = z/(z-1) lies in [0, 1), and the series is summed until
// the tail bound drops below 1e-15 of the partial sum.
double eval_2f1(const HypParams& p, double z);

}  // namespace pdmwell
