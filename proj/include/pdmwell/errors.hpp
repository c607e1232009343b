#pragma once

#include <stdexcept>
#include <string>

namespace pdmwell {

// Ambiguity exponents must satisfy alpha + beta + gamma = -1.
struct ConstraintViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Position at or beyond the well walls, including the guard band next to them.
struct OutsideDomain : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested an operation that needs a real well-depth parameter, but the
// coupling discriminant is negative.
struct LambdaUndefined : std::domain_error {
  using std::domain_error::domain_error;
};

// Nonpositive or nonfinite length/scale parameter.
struct InvalidScale : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Level index outside 0 <= n < lambda - 1.
struct NoSuchLevel : std::domain_error {
  using std::domain_error::domain_error;
};

// Hypergeometric denominator parameter hits a nonpositive integer before the
// series terminates.
struct PoleAtC : std::domain_error {
  using std::domain_error::domain_error;
};

// Series failed to converge within the iteration cap.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Doubling the grid moved a requested eigenvalue by more than the tolerance.
struct GridTooCoarse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Richardson extrapolation requires the same span and a 2:1 spacing ratio.
struct GridMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal consistency check of a numerical routine failed.
struct NumericalInstability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pdmwell
