// Acceptance gate: ten end-to-end checks of the closed-form pipeline against
// independent numerical routes and the published comparison table.  Each
// check prints exactly one [PASS]/[FAIL] line with a short quantitative
// detail; the process exit code is the number of failed checks.
//
// Usage: pdmwell_acceptance [criterion]   (1..10; default runs all)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pdmwell/bound_states.hpp"
#include "pdmwell/errors.hpp"
#include "pdmwell/grid_solvers.hpp"
#include "pdmwell/hyp2f1.hpp"
#include "pdmwell/ordering.hpp"
#include "pdmwell/ordering_survey.hpp"
#include "pdmwell/quadrature.hpp"
#include "pdmwell/well_geometry.hpp"
#include "support/oracles.hpp"

using namespace pdmwell;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Couplings couplings_for_depth(double lambda) {
  const double alpha = (lambda - 2.0) / 4.0;
  return couplings(alpha, -1.0 - 2.0 * alpha);
}

// --- 1 -----------------------------------------------------------------

Outcome survey_depths() {
  const auto rows = ordering_survey();
  const double expected[] = {1.0, 2.0, 1.0, 3.0, 3.0, 4.0, 5.0, 6.0};
  int k = 0;
  double worst = 0.0;
  for (const SurveyRow& row : rows) {
    if (!row.has_params) continue;
    if (!row.lambda_computed)
      return {false, "row '" + row.label + "' lost its depth parameter"};
    const double dev = std::abs(*row.lambda_computed - expected[k]);
    worst = std::max(worst, dev);
    ++k;
  }
  if (k != 8) return {false, "expected 8 classified rows, saw " + std::to_string(k)};
  return {worst <= 1e-12,
          "8 orderings, depth parameters 1,2,1,3,3,4,5,6 reproduced to " +
              num(worst)};
}

// --- 2 -----------------------------------------------------------------

Outcome survey_energies() {
  const auto rows = ordering_survey();
  // Ground target energies of the classified rows after the first:
  // flat marginal level, empty spectra, and the new family.
  const double expected[] = {0.0, 0.0, 5.0, 0.0, 0.0, 0.0, 0.0};
  int k = 0;
  double worst = 0.0;
  for (size_t i = 2; i < rows.size(); ++i) {
    if (!rows[i].has_params || !rows[i].e0_computed)
      return {false, "row '" + rows[i].label + "' has no recomputed energy"};
    worst = std::max(worst, std::abs(*rows[i].e0_computed - expected[k]));
    ++k;
  }
  // The first row must be flagged: the closed form gives 1, print says 1/4.
  const bool first_flagged = !rows[0].discrepancy.empty() &&
                             rows[0].e0_computed &&
                             std::abs(*rows[0].e0_computed - 1.0) <= 1e-12;
  if (!first_flagged)
    return {false, "first-row ground energy mismatch (1 vs printed 0.25) "
                   "was not flagged"};
  return {worst <= 1e-12,
          "7 ground energies reproduced to " + num(worst) +
              "; first-row print mismatch flagged"};
}

// --- 3 -----------------------------------------------------------------

Outcome reference_spectra() {
  const WellSpec w(1.0);
  SolveOptions lax;
  lax.verify_grid = false;
  double worst = 0.0;
  int levels = 0;
  for (double lambda : {3.0, 4.0, 5.0, 6.0}) {
    const Couplings c = couplings_for_depth(lambda);
    const int k = bound_state_count(lambda);
    const EigenResult coarse =
        solve_q_space(c, w, symmetric_grid(10.0, 2001), k, lax);
    const EigenResult fine =
        solve_q_space(c, w, symmetric_grid(10.0, 4001), k, lax);
    const EigenResult ext = refine(coarse, fine);
    const auto closed = energy_levels(c, w.mu);
    for (int n = 0; n < k; ++n) {
      const double rel = std::abs(ext.energies[n] - closed[n].ref_energy) /
                         std::abs(closed[n].ref_energy);
      worst = std::max(worst, rel);
      ++levels;
    }
  }
  return {worst <= 1e-6, std::to_string(levels) +
                             " levels across depths 3,4,5,6; worst relative "
                             "error " +
                             num(worst) + " (tolerance 1e-6)"};
}

// --- 4 -----------------------------------------------------------------

Outcome target_spectra() {
  const WellSpec w(1.0);
  SolveOptions lax;
  lax.verify_grid = false;
  const auto [coarse, fine] = x_grid_pair(w, 240001);
  const double params[][2] = {
      {-1.0, 1.0}, {0.25, -1.5}, {0.5, -2.0}, {0.75, -2.5}};
  double worst = 0.0;
  int levels = 0;
  for (const auto& p : params) {
    const Couplings c = couplings(p[0], p[1]);
    const OrderingParams o = make_ordering(p[0], p[1], -1.0 - p[0] - p[1]);
    const int k = bound_state_count(*c.lambda);
    const EigenResult rc = solve_x_space(o, w, coarse, k, lax);
    const EigenResult rf = solve_x_space(o, w, fine, k, lax);
    const EigenResult ext = refine(rc, rf);
    const auto closed = energy_levels(c, w.mu);
    for (int n = 0; n < k; ++n) {
      worst = std::max(worst, std::abs(ext.energies[n] - closed[n].target_energy));
      ++levels;
    }
  }
  return {worst <= 5e-3, std::to_string(levels) +
                             " well levels across 4 orderings; worst absolute "
                             "deviation " +
                             num(worst) + " (tolerance 5e-3)"};
}

// --- 5 -----------------------------------------------------------------

Outcome map_closure() {
  const WellSpec w(1.0);
  std::mt19937 rng(20250816);
  std::uniform_real_distribution<double> da(-2.0, 2.0);
  std::uniform_real_distribution<double> db(-3.0, 2.0);
  std::uniform_real_distribution<double> dq(-10.0, 10.0);
  double worst = 0.0;
  int orderings = 0;
  while (orderings < 20) {
    const Couplings c = couplings(da(rng), db(rng));
    if (!c.lambda) continue;
    ++orderings;
    for (int i = 0; i < 10000; ++i) {
      const double q = dq(rng);
      worst = std::max(worst,
                       std::abs(v_eff_from_mass(w, c, q) - v_eff_closed(w, c, q)));
    }
  }
  return {worst <= 1e-10,
          "20 random orderings x 10000 points: mass-derivative route vs "
          "closed form, worst gap " +
              num(worst) + " (tolerance 1e-10)"};
}

// --- 6 -----------------------------------------------------------------

Outcome ground_state_identity() {
  const WellSpec w(1.0);
  double worst = 0.0;
  for (double lambda : {2.5, 3.0, 4.7, 6.0}) {
    const Couplings c = couplings_for_depth(lambda);
    const BoundState s = make_bound_state(c, w, 0);
    const double peak = std::abs(ground_state_closed(c, w, 0.0));
    for (double x : oracles::linspace(-0.95, 0.95, 101)) {
      const double ref = ground_state_closed(c, w, x);
      worst = std::max(worst, std::abs(psi_n(s, w, x) - ref) / peak);
      worst = std::max(worst, std::abs(psi_direct(s, w, x) - ref) / peak);
    }
  }
  return {worst <= 1e-10,
          "4 depths, 101 points, hypergeometric and direct-series routes vs "
          "the closed ground profile: worst relative deviation " +
              num(worst)};
}

// --- 7 -----------------------------------------------------------------

Outcome wall_suppression() {
  const WellSpec w(1.0);
  std::string failures;
  // Depths at or below 2 must NOT pass the wall-decay probe.
  for (double lambda : {1.5, 2.0}) {
    const BoundState s = make_bound_state(couplings_for_depth(lambda), w, 0);
    if (boundary_check(s, w))
      failures += " (depth " + num(lambda) + ", level 0: unexpectedly decays)";
  }
  // Every level of an admissible ordering is required to die off at the
  // walls with strictly shrinking amplitude.
  for (double lambda : {2.01, 3.0}) {
    const Couplings c = couplings_for_depth(lambda);
    for (int n = 0; n < bound_state_count(lambda); ++n) {
      const BoundState s = make_bound_state(c, w, n);
      if (!boundary_check(s, w))
        failures += " (depth " + num(lambda) + ", level " + std::to_string(n) +
                    ": wall amplitude fails to shrink)";
    }
  }
  if (failures.empty())
    return {true, "wall amplitudes shrink for admissible depths and persist "
                  "at depth <= 2"};
  return {false,
          "wall-decay probe (amplitudes at 1e-2..1e-8 from the wall must "
          "strictly shrink):" + failures +
              "; the top level of each admissible ordering has decay rate "
              "depth-1-n <= 1, so its well amplitude stays finite or grows "
              "toward the walls and the probe correctly reports it"};
}

// --- 8 -----------------------------------------------------------------

Outcome orthonormal_basis() {
  const WellSpec w(1.0);
  const Couplings c = couplings_for_depth(6.0);
  std::vector<BoundState> states;
  for (int n = 0; n < 5; ++n) states.push_back(make_bound_state(c, w, n));

  double worst = 0.0;
  const double a = 1.0 - 1e-13;
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t j = i; j < states.size(); ++j) {
      const auto prod = [&](double x) {
        return psi_n(states[i], w, x) * psi_n(states[j], w, x);
      };
      const double gram = adaptive_simpson(prod, -a, a, 1e-12, 56);
      const double expected = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(gram - expected));
    }
  }
  if (worst > 1e-8)
    return {false, "5-level Gram matrix deviates from identity by " + num(worst)};

  // Interior node counts must equal the level index.
  for (int n = 0; n < 5; ++n) {
    int nodes = 0;
    double prev = psi_n(states[n], w, -0.999);
    for (double x : oracles::linspace(-0.999, 0.999, 2001)) {
      const double v = psi_n(states[n], w, x);
      if (prev != 0.0 && v != 0.0 && (v > 0) != (prev > 0)) ++nodes;
      if (v != 0.0) prev = v;
    }
    if (nodes != n)
      return {false, "level " + std::to_string(n) + " shows " +
                         std::to_string(nodes) + " interior nodes"};
  }
  return {true,
          "deepest tabulated ordering: 5-level Gram matrix within " +
              num(worst) + " of identity (tolerance 1e-8), node counts 0..4"};
}

// --- 9 -----------------------------------------------------------------

Outcome integer_transparency() {
  const WellSpec w(1.0);
  double worst_r = 0.0, worst_flux = 0.0;
  for (double lambda : {2.0, 3.0, 4.0}) {
    const Couplings c = couplings_for_depth(lambda);
    for (double k : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const ScatterResult r = reflection(c, w, k);
      worst_r = std::max(worst_r, r.reflection_prob);
      worst_flux = std::max(
          worst_flux,
          std::abs(r.reflection_prob + r.transmission_prob - 1.0));
    }
  }
  if (worst_r > 1e-6)
    return {false, "integer depth reflected " + num(worst_r)};
  if (worst_flux > 1e-8)
    return {false, "flux conservation violated by " + num(worst_flux)};
  // Non-integer depth control: visibly reflective at low wavenumber.
  const ScatterResult half = reflection(couplings_for_depth(2.5), w, 0.2);
  if (!(half.reflection_prob > 0.01))
    return {false, "non-integer control depth failed to reflect"};
  return {true, "depths 2,3,4 x five wavenumbers: max reflection " +
                    num(worst_r) + ", flux drift " + num(worst_flux) +
                    "; control depth 2.5 reflects " +
                    num(half.reflection_prob)};
}

// --- 10 ----------------------------------------------------------------

Outcome series_kernel() {
  std::mt19937 rng(999);
  std::uniform_real_distribution<double> dab(-3.0, 3.0);
  std::uniform_real_distribution<double> dc(0.3, 4.0);
  std::uniform_real_distribution<double> dz_wide(-30.0, -0.01);
  std::uniform_real_distribution<double> dz_disk(-0.85, -0.05);
  std::uniform_real_distribution<double> dt(0.05, 3.0);
  std::uniform_real_distribution<double> dlog(-45.0, -0.05);
  double worst = 0.0;
  int samples = 0;

  for (int i = 0; i < 200; ++i) {  // arctan family
    const double t = dt(rng);
    const double lhs = eval_2f1({0.5, 1.0, 1.5}, -t * t);
    const double rhs = std::atan(t) / t;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    ++samples;
  }
  for (int i = 0; i < 200; ++i) {  // logarithm family
    const double z = dlog(rng);
    const double lhs = eval_2f1({1.0, 1.0, 2.0}, z);
    const double rhs = -std::log1p(-z) / z;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    ++samples;
  }
  for (int i = 0; i < 200; ++i) {  // Euler transformation
    const double a = dab(rng), b = dab(rng), cc = dc(rng), z = dz_wide(rng);
    const double lhs = eval_2f1({a, b, cc}, z);
    const double rhs =
        std::pow(1.0 - z, cc - a - b) * eval_2f1({cc - a, cc - b, cc}, z);
    worst = std::max(worst, std::abs(lhs - rhs) /
                                std::max({std::abs(lhs), std::abs(rhs), 1e-30}));
    ++samples;
  }
  for (int i = 0; i < 200; ++i) {  // direct series inside the unit disk
    const double a = dab(rng), b = dab(rng), cc = dc(rng), z = dz_disk(rng);
    const double lhs = eval_2f1({a, b, cc}, z);
    const double rhs = oracles::naive_2f1(a, b, cc, z);
    worst = std::max(worst,
                     std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    ++samples;
  }
  for (int i = 0; i < 200; ++i) {  // contiguous-parameter relation
    const double a = dab(rng), b = dab(rng), cc = dc(rng), z = dz_wide(rng);
    const double t1 = cc * eval_2f1({a, b, cc}, z);
    const double t2 = -cc * eval_2f1({a + 1.0, b, cc}, z);
    const double t3 = b * z * eval_2f1({a + 1.0, b + 1.0, cc + 1.0}, z);
    const double scale =
        std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1.0});
    worst = std::max(worst, std::abs(t1 + t2 + t3) / scale);
    ++samples;
  }
  return {worst <= 1e-9, std::to_string(samples) +
                             " random samples over five identity families; "
                             "worst relative residual " +
                             num(worst) + " (tolerance 1e-9)"};
}

// -----------------------------------------------------------------------

struct Criterion {
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"published-orderings depth recomputation", survey_depths},
    {"published-orderings ground energies", survey_energies},
    {"mapped-problem spectra vs finite differences", reference_spectra},
    {"well spectra vs the position-space solver", target_spectra},
    {"potential map closure", map_closure},
    {"ground-state closed form vs series routes", ground_state_identity},
    {"wall suppression across the depth ladder", wall_suppression},
    {"orthonormality and node counts", orthonormal_basis},
    {"integer-depth transparency", integer_transparency},
    {"hypergeometric identity battery", series_kernel},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "criterion must be 1..10\n");
      return 64;
    }
  }
  int failures = 0;
  for (int i = 1; i <= 10; ++i) {
    if (only && i != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = kCriteria[i - 1].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("unexpected exception: ") + e.what()};
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() /
        1000.0;
    std::printf("[%s] %d. %s: %s (%.1f ms)\n", outcome.pass ? "PASS" : "FAIL",
                i, kCriteria[i - 1].title, outcome.detail.c_str(), ms);
    if (!outcome.pass) ++failures;
  }
  return failures;
}
