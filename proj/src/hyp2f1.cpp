#include "pdmwell/hyp2f1.hpp"

#include <cmath>
#include <cstdlib>

namespace pdmwell {

namespace {

constexpr double kIntegerTol = 1e-12;
constexpr long kMaxTerms = 1000000;

// Index k >= 0 with v == -k, if v sits within kIntegerTol of a nonpositive
// integer.
std::optional<int> nonpositive_integer_index(double v) {
  const double r = std::round(v);
  if (r <= 0.0 && std::abs(v - r) <= kIntegerTol) return static_cast<int>(-r);
  return std::nullopt;
}

// Sum of the first (degree + 1) Gauss terms; the parameter snapped to a
// nonpositive integer zeroes every later term.
double terminating_sum(double a, double b, double c, double z, int degree) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < degree; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

}  // namespace

std::optional<int> is_terminating(const HypParams& p) {
  const auto ka = nonpositive_integer_index(p.a);
  const auto kb = nonpositive_integer_index(p.b);
  if (ka && kb) return std::min(*ka, *kb);
  return ka ? ka : kb;
}

double eval_2f1(const HypParams& p, double z) {
  if (!(z <= 0.0)) throw std::invalid_argument("eval_2f1: argument must satisfy z <= 0");
  if (z == 0.0) return 1.0;

  const auto degree = is_terminating(p);
  const auto pole = nonpositive_integer_index(p.c);
  if (degree && (!pole || *degree <= *pole))
    return terminating_sum(p.a, p.b, p.c, z, *degree);
  if (pole) throw PoleAtC("eval_2f1: c is a nonpositive integer and the series does not terminate first");

  // Pfaff transformation, applied on the parameter of smaller magnitude to
  // keep the prefactor tame.
  const double w = z / (z - 1.0);
  double p1, p2;
  if (std::abs(p.a) <= std::abs(p.b)) {
    p1 = p.a;
    p2 = p.c - p.b;
  } else {
    p1 = p.b;
    p2 = p.c - p.a;
  }
  double term = 1.0;
  double sum = 1.0;
  bool converged = false;
  for (long k = 0; k < kMaxTerms; ++k) {
    term *= (p1 + k) * (p2 + k) / ((p.c + k) * (k + 1.0)) * w;
    sum += term;
    if (term == 0.0 || (k >= 8 && std::abs(term) / (1.0 - w) <= 1e-15 * std::abs(sum))) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence("eval_2f1: transformed series did not converge within the term cap");
  return std::pow(1.0 - z, -p1) * sum;
}

}  // namespace pdmwell
