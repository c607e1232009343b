#include "pdmwell/ordering_survey.hpp"

#include <cmath>

#include "pdmwell/ordering.hpp"

namespace pdmwell {
namespace {

SurveyRow make_row(std::string label, double alpha, double beta_printed,
                   double beta_used, std::optional<double> lambda_printed,
                   std::optional<double> e_printed, bool admissible_printed) {
  SurveyRow row;
  row.label = std::move(label);
  row.alpha = alpha;
  row.beta_printed = beta_printed;
  row.beta_used = beta_used;
  row.beta_corrected = beta_printed != beta_used;
  row.lambda_printed = lambda_printed;
  row.e_printed = e_printed;
  row.admissible_printed = admissible_printed;

  const Couplings c = couplings(alpha, beta_used);
  const AdmissibilityVerdict verdict = classify(alpha, beta_used);
  row.lambda_computed = c.lambda;
  row.admissible_computed = verdict.admissible;
  if (c.lambda) {
    const double lambda = *c.lambda;
    // Ground-level target energy in mu^2 units: shift - (lambda - 1)^2.
    row.e0_computed = c.shift_coefficient - (lambda - 1.0) * (lambda - 1.0);
  }

  if (row.beta_corrected) {
    row.discrepancy =
        "printed beta violates 2*alpha + beta = -1; recomputed with the "
        "constraint-consistent value";
  } else if (row.e_printed && row.e0_computed &&
             std::abs(*row.e_printed - *row.e0_computed) > 1e-12) {
    row.discrepancy = "ground energy: closed form gives " +
                      std::to_string(*row.e0_computed) + ", table prints " +
                      std::to_string(*row.e_printed);
  }
  return row;
}

}  // namespace

std::vector<SurveyRow> ordering_survey() {
  std::vector<SurveyRow> rows;
  rows.reserve(9);

  rows.push_back(make_row("Zhu and Kroemer; Li and Kuhn", -0.5, 0.0, 0.0, 1.0,
                          0.25, false));

  // Gora and Williams use alpha = -1, beta = gamma = 0: alpha != gamma, so
  // the one-parameter classification does not apply and the published row
  // carries dashes.
  SurveyRow gora;
  gora.label = "Gora and Williams";
  gora.has_params = false;
  gora.alpha = -1.0;
  gora.beta_printed = 0.0;
  gora.beta_used = 0.0;
  gora.admissible_printed = false;
  gora.discrepancy = "alpha differs from gamma; outside this classification";
  rows.push_back(std::move(gora));

  rows.push_back(
      make_row("Ben Danial and Duke", 0.0, -1.0, -1.0, 2.0, 0.0, false));
  rows.push_back(make_row("Mustafa and Mazharimousavi", -0.25, -0.5, -0.5, 1.0,
                          0.0, false));
  rows.push_back(make_row("new (alpha = -1)", -1.0, 1.0, 1.0, 3.0, 5.0, true));
  rows.push_back(
      make_row("new (alpha = 1/4)", 0.25, -1.5, -1.5, 3.0, 0.0, true));
  rows.push_back(
      make_row("new (alpha = 1/2)", 0.5, -2.0, -2.0, 4.0, 0.0, true));
  rows.push_back(
      make_row("new (alpha = 3/4)", 0.75, -2.5, -2.5, 5.0, 0.0, true));
  rows.push_back(make_row("new (alpha = 1)", 1.0, -2.0, -3.0, 6.0, 0.0, true));
  return rows;
}

}  // namespace pdmwell
