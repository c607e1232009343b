// Command-line front end for the position-dependent-mass well: ordering
// classification, closed-form spectra, wavefunction and potential tables,
// scattering scans, the literature-survey report, and self-validation of
// the analytic results against the grid solvers.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pdmwell/bound_states.hpp"
#include "pdmwell/errors.hpp"
#include "pdmwell/grid_solvers.hpp"
#include "pdmwell/ordering.hpp"
#include "pdmwell/ordering_survey.hpp"
#include "pdmwell/quadrature.hpp"
#include "pdmwell/well_geometry.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pdmwell;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<ordered_json>> rows;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

std::string csv_cell(const ordered_json& c) {
  if (c.is_null()) return "undefined";
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  if (c.is_string()) return csv_escape(c.get<std::string>());
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  return fmt(c.get<double>());
}

void write_table(std::ostream& os, const Table& t, bool as_json) {
  if (as_json) {
    ordered_json obj = ordered_json::object();
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      ordered_json arr = ordered_json::array();
      for (const auto& row : t.rows) arr.push_back(row[j]);
      obj[t.columns[j]] = std::move(arr);
    }
    os << obj.dump(2) << "\n";
    return;
  }
  for (std::size_t j = 0; j < t.columns.size(); ++j)
    os << (j ? "," : "") << csv_escape(t.columns[j]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? "," : "") << csv_cell(row[j]);
    os << "\n";
  }
}

int emit(const std::string& path, const Table& t, bool as_json) {
  if (path == "-") {
    write_table(std::cout, t, as_json);
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 4;
  }
  write_table(os, t, as_json);
  if (!os.good()) {
    std::cerr << "write failed: " << path << "\n";
    return 4;
  }
  return 0;
}

struct Common {
  double alpha = 0.0;
  double beta = 0.0;
  double L = 1.0;
  std::string format = "csv";
  std::string output = "-";
  bool mu2_units = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_params = true) {
  if (needs_params) {
    cmd->add_option("--alpha", c.alpha,
                    "kinetic ordering exponent alpha (gamma is set equal)")
        ->required();
    cmd->add_option("--beta", c.beta, "kinetic ordering exponent beta")
        ->required();
  }
  cmd->add_option("--L", c.L, "well half-width (default 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", c.output, "output path, - for stdout");
}

// Raw energies carry 1/L^2; with --mu2-units they are reported in units of
// mu^2 instead.
double escale(const Common& c, double raw) {
  return c.mu2_units ? raw * c.L * c.L : raw;
}

ordered_json opt_cell(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

int cmd_classify(const Common& cc) {
  const double gamma = -1.0 - cc.alpha - cc.beta;
  const OrderingParams o = make_ordering(cc.alpha, cc.beta, gamma);
  const Couplings c = couplings(cc.alpha, cc.beta);
  const AdmissibilityVerdict v = classify(cc.alpha, cc.beta);
  Table t;
  t.columns = {"alpha", "beta",  "gamma",      "g1",
               "g2",    "lambda", "shift_coefficient", "admissible",
               "bound_state_count"};
  t.rows.push_back({o.alpha, o.beta, o.gamma, c.g1, c.g2, opt_cell(c.lambda),
                    c.shift_coefficient, v.admissible, v.bound_state_count});
  return emit(cc.output, t, cc.format == "json");
}

int cmd_spectrum(const Common& cc) {
  const WellSpec w(cc.L);
  const Couplings c = couplings(cc.alpha, cc.beta);
  const std::vector<EnergyLevel> levels = energy_levels(c, w.mu);
  Table t;
  t.columns = {"n", "ref_energy", "target_energy"};
  for (const auto& lv : levels)
    t.rows.push_back(
        {lv.n, escale(cc, lv.ref_energy), escale(cc, lv.target_energy)});
  return emit(cc.output, t, cc.format == "json");
}

struct WaveOpts {
  int n = 0;
  int points = 101;
  std::string space = "x";
  double extent = 0.0;  // 0: 0.99 L in x, 8 L in q
};

int cmd_wavefunction(const Common& cc, const WaveOpts& wo) {
  const WellSpec w(cc.L);
  const Couplings c = couplings(cc.alpha, cc.beta);
  const BoundState state = make_bound_state(c, w, wo.n);
  const Space sp = (wo.space == "q") ? Space::kQ : Space::kX;
  const double extent =
      wo.extent > 0.0 ? wo.extent
                      : (sp == Space::kX ? 0.99 * cc.L : 8.0 * cc.L);
  const WavefunctionTable table = tabulate(state, w, sp, wo.points, extent);
  Table t;
  t.columns = (sp == Space::kX) ? std::vector<std::string>{"x", "psi"}
                                : std::vector<std::string>{"q", "phi"};
  for (std::size_t i = 0; i < table.abscissae.size(); ++i)
    t.rows.push_back({table.abscissae[i], table.values[i]});
  return emit(cc.output, t, cc.format == "json");
}

struct PotOpts {
  int points = 201;
  double extent = 0.0;  // 0: 0.99 L
  double qmax = 0.0;    // 0: 8 L
  std::string output_q = "-";
};

int cmd_potential(const Common& cc, const PotOpts& po) {
  if (po.points < 2) {
    std::cerr << "potential needs at least 2 points\n";
    return 2;
  }
  const WellSpec w(cc.L);
  const double gamma = -1.0 - cc.alpha - cc.beta;
  const OrderingParams o = make_ordering(cc.alpha, cc.beta, gamma);
  const Couplings c = couplings(cc.alpha, cc.beta);
  const double extent = po.extent > 0.0 ? po.extent : 0.99 * cc.L;
  const double qmax = po.qmax > 0.0 ? po.qmax : 8.0 * cc.L;
  if (!inside_well(w, extent)) {
    std::cerr << "extent reaches the well walls\n";
    return 3;
  }

  std::vector<double> xs(po.points), qs(po.points);
  const double hx = 2.0 * extent / (po.points - 1);
  const double hq = 2.0 * qmax / (po.points - 1);
  for (int i = 0; i < po.points; ++i) {
    xs[i] = (i == po.points - 1) ? extent : -extent + i * hx;
    qs[i] = (i == po.points - 1) ? qmax : -qmax + i * hq;
  }

  const bool as_json = cc.format == "json";
  if (cc.output == "-" && po.output_q == "-") {
    // Single combined table so stdout stays one CSV stream / one JSON object.
    Table t;
    t.columns = {"x", "v_tilde", "q", "v_eff"};
    for (int i = 0; i < po.points; ++i)
      t.rows.push_back({xs[i], escale(cc, v_tilde(w, o, xs[i])), qs[i],
                        escale(cc, v_eff_from_mass(w, c, qs[i]))});
    return emit("-", t, as_json);
  }

  Table tx;
  tx.columns = {"x", "v_tilde"};
  for (int i = 0; i < po.points; ++i)
    tx.rows.push_back({xs[i], escale(cc, v_tilde(w, o, xs[i]))});
  Table tq;
  tq.columns = {"q", "v_eff"};
  for (int i = 0; i < po.points; ++i)
    tq.rows.push_back({qs[i], escale(cc, v_eff_from_mass(w, c, qs[i]))});
  const int rc = emit(cc.output, tx, as_json);
  if (rc != 0) return rc;
  return emit(po.output_q, tq, as_json);
}

struct ScatOpts {
  std::vector<double> ks;
  double kmin = 0.0;
  double kmax = 0.0;
  int count = 0;
};

int cmd_scatter(const Common& cc, const ScatOpts& so) {
  const bool sweep = so.count > 0 || so.kmin != 0.0 || so.kmax != 0.0;
  if (!so.ks.empty() && sweep) {
    std::cerr << "give either repeated --k values or a --kmin/--kmax/--count "
                 "sweep, not both\n";
    return 2;
  }
  std::vector<double> ks = so.ks;
  if (ks.empty()) {
    if (so.count < 1) {
      std::cerr << "provide --k values or --kmin/--kmax/--count\n";
      return 2;
    }
    if (so.count > 1 && !(so.kmax > so.kmin)) {
      std::cerr << "--kmax must exceed --kmin for a sweep\n";
      return 2;
    }
    for (int i = 0; i < so.count; ++i)
      ks.push_back(so.count == 1
                       ? so.kmin
                       : so.kmin + i * (so.kmax - so.kmin) / (so.count - 1));
  }

  const WellSpec w(cc.L);
  const Couplings c = couplings(cc.alpha, cc.beta);
  Table t;
  t.columns = {"k", "R2", "T2"};
  for (const double k : ks) {
    const ScatterResult r = reflection(c, w, k);
    t.rows.push_back({r.k, r.reflection_prob, r.transmission_prob});
  }
  return emit(cc.output, t, cc.format == "json");
}

int cmd_table1(const Common& cc) {
  Table t;
  t.columns = {"label",
               "alpha",
               "beta_printed",
               "beta_used",
               "lambda_printed",
               "lambda_computed",
               "e0_printed",
               "e0_computed",
               "admissible_printed",
               "admissible_computed",
               "discrepancy"};
  for (const SurveyRow& row : ordering_survey()) {
    if (!row.has_params) {
      t.rows.push_back({row.label, nullptr, nullptr, nullptr, nullptr, nullptr,
                        nullptr, nullptr, row.admissible_printed, nullptr,
                        row.discrepancy});
      continue;
    }
    t.rows.push_back({row.label, row.alpha, row.beta_printed, row.beta_used,
                      opt_cell(row.lambda_printed),
                      opt_cell(row.lambda_computed), opt_cell(row.e_printed),
                      opt_cell(row.e0_computed), row.admissible_printed,
                      row.admissible_computed
                          ? ordered_json(*row.admissible_computed)
                          : ordered_json(nullptr),
                      row.discrepancy});
  }
  return emit(cc.output, t, cc.format == "json");
}

int cmd_validate(const Common& cc, bool tol_given, double tol_flag) {
  double tol = 1e-6;
  if (const char* env = std::getenv("PDM_SPECTRA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      std::cerr << "PDM_SPECTRA_TOL must be a positive number\n";
      return 2;
    }
    tol = v;
  }
  if (tol_given) tol = tol_flag;

  const WellSpec w(cc.L);
  const double gamma = -1.0 - cc.alpha - cc.beta;
  const OrderingParams o = make_ordering(cc.alpha, cc.beta, gamma);
  const Couplings c = couplings(cc.alpha, cc.beta);
  if (!c.lambda) {
    std::cout << "depth parameter undefined for alpha=" << fmt(cc.alpha)
              << ", beta=" << fmt(cc.beta) << ": nothing to validate\n";
    return 3;
  }
  const double lambda = *c.lambda;
  const double mu2 = w.mu * w.mu;
  bool all = true;
  const auto report = [&](const std::string& name, bool ok,
                          const std::string& detail) {
    std::cout << "check " << name << ": " << (ok ? "PASS" : "FAIL") << " ("
              << detail << ")\n";
    all = all && ok;
  };

  {
    double worst = 0.0;
    for (int i = 0; i < 2001; ++i) {
      const double q = -10.0 * cc.L + i * (20.0 * cc.L / 2000.0);
      worst = std::max(worst, std::abs(v_eff_from_mass(w, c, q) -
                                       v_eff_closed(w, c, q)));
    }
    report("pct-closure", worst <= 1e-10 * mu2,
           "max deviation " + fmt(worst / mu2) + " mu^2 over 2001 points");
  }

  const int count = bound_state_count(lambda);
  // Grid checks cover the wall-resolved levels (decay rate >= 1); levels
  // hugging the continuum need exponentially large boxes.
  int resolved = 0;
  while (resolved < count && lambda - 1.0 - resolved >= 1.0 - 1e-9)
    ++resolved;
  const int nres = std::min(resolved, 8);
  const std::vector<EnergyLevel> closed = energy_levels(c, w.mu);

  if (nres >= 1) {
    SolveOptions so;
    so.verify_grid = false;
    const EigenResult coarse =
        solve_q_space(c, w, symmetric_grid(10.0 * cc.L, 2001), nres, so);
    const EigenResult fine =
        solve_q_space(c, w, symmetric_grid(10.0 * cc.L, 4001), nres, so);
    const EigenResult rich = refine(coarse, fine);
    double worst = 0.0;
    for (int j = 0; j < nres; ++j)
      worst = std::max(worst, std::abs(rich.energies[j] -
                                       closed[j].ref_energy) /
                                  std::abs(closed[j].ref_energy));
    report("reference-spectrum", worst <= tol,
           "worst relative error " + fmt(worst) + " over " +
               std::to_string(nres) + " level(s), tolerance " + fmt(tol));
  } else {
    report("reference-spectrum", true, "no wall-resolved levels; skipped");
  }

  if (nres >= 1) {
    SolveOptions so;
    so.verify_grid = false;
    const auto grids = x_grid_pair(w, 240001);
    const EigenResult coarse = solve_x_space(o, w, grids.first, nres, so);
    const EigenResult fine = solve_x_space(o, w, grids.second, nres, so);
    const EigenResult rich = refine(coarse, fine);
    double worst = 0.0;
    for (int j = 0; j < nres; ++j)
      worst = std::max(worst, std::abs(rich.energies[j] -
                                       closed[j].target_energy) /
                                  mu2);
    report("target-spectrum", worst <= 5e-3,
           "worst absolute error " + fmt(worst) + " mu^2 over " +
               std::to_string(nres) + " level(s), tolerance 0.005");
  } else {
    report("target-spectrum", true, "no wall-resolved levels; skipped");
  }

  if (lambda > 1.0) {
    const BoundState ground = make_bound_state(c, w, 0);
    double dev = 0.0, peak = 0.0;
    for (int i = 0; i < 51; ++i) {
      const double x = -0.9 * cc.L + i * (1.8 * cc.L / 50.0);
      const double g = ground_state_closed(c, w, x);
      dev = std::max(dev, std::abs(psi_n(ground, w, x) - g));
      peak = std::max(peak, std::abs(g));
    }
    report("ground-state", dev <= 1e-10 * peak,
           "max deviation " + fmt(dev) + " against peak " + fmt(peak));
  } else {
    report("ground-state", true, "depth parameter <= 1; skipped");
  }

  if (count >= 2) {
    const int klev = std::min(count, 5);
    std::vector<BoundState> states;
    for (int n = 0; n < klev; ++n) states.push_back(make_bound_state(c, w, n));
    double worst = 0.0;
    for (int mth = 0; mth < klev; ++mth) {
      for (int nth = mth; nth < klev; ++nth) {
        const double big =
            cc.L * (20.0 / std::min(lambda - 1.0 - mth, lambda - 1.0 - nth) +
                    20.0);
        const double overlap = panelled_symmetric_integral(
            [&](double q) { return phi_n(states[mth], q) * phi_n(states[nth], q); },
            big, cc.L);
        worst = std::max(worst, std::abs(overlap - (mth == nth ? 1.0 : 0.0)));
      }
    }
    report("orthonormality", worst <= 1e-8,
           "worst Gram deviation " + fmt(worst) + " over " +
               std::to_string(klev) + " level(s)");
  } else {
    report("orthonormality", true, "fewer than two levels; skipped");
  }

  std::cout << (all ? "all checks passed" : "validation failed") << "\n";
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exactly solvable particle with position-dependent mass in an "
      "infinite well: classification, spectra, wavefunctions, potentials, "
      "scattering, and self-validation"};
  app.require_subcommand(1);

  Common cc;
  WaveOpts wo;
  PotOpts po;
  ScatOpts so;
  double tol_flag = 0.0;

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "couplings, depth parameter, and admissibility verdict");
  add_common(classify_cmd, cc);

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "closed-form discrete energies");
  add_common(spectrum_cmd, cc);
  spectrum_cmd->add_flag("--mu2-units", cc.mu2_units,
                         "report energies in units of mu^2 = 1/L^2");

  CLI::App* wave_cmd =
      app.add_subcommand("wavefunction", "normalized eigenfunction table");
  add_common(wave_cmd, cc);
  wave_cmd->add_option("--n", wo.n, "level index (default 0)");
  wave_cmd->add_option("--points", wo.points, "sample count (default 101)");
  wave_cmd->add_option("--space", wo.space,
                       "coordinate: x (well) or q (mapped), default x")
      ->check(CLI::IsMember({"x", "q"}));
  wave_cmd->add_option(
      "--extent", wo.extent,
      "half-range of the table (default 0.99 L in x, 8 L in q)")
      ->check(CLI::PositiveNumber);

  CLI::App* pot_cmd = app.add_subcommand(
      "potential", "effective potential profiles in both coordinates");
  add_common(pot_cmd, cc);
  pot_cmd->add_flag("--mu2-units", cc.mu2_units,
                    "report energies in units of mu^2 = 1/L^2");
  pot_cmd->add_option("--points", po.points, "sample count (default 201)");
  pot_cmd->add_option("--extent", po.extent,
                      "half-range in x (default 0.99 L)")
      ->check(CLI::PositiveNumber);
  pot_cmd->add_option("--qmax", po.qmax,
                      "half-range in the mapped coordinate (default 8 L)")
      ->check(CLI::PositiveNumber);
  pot_cmd->add_option("--output-q", po.output_q,
                      "output path for the mapped-coordinate profile; with "
                      "both outputs on stdout a single combined table is "
                      "written");

  CLI::App* scatter_cmd = app.add_subcommand(
      "scatter", "reflection/transmission of the mapped well");
  add_common(scatter_cmd, cc);
  scatter_cmd->add_option("--k", so.ks, "wavenumber (repeatable)");
  scatter_cmd->add_option("--kmin", so.kmin, "sweep start");
  scatter_cmd->add_option("--kmax", so.kmax, "sweep end");
  scatter_cmd->add_option("--count", so.count, "sweep sample count");

  CLI::App* validate_cmd = app.add_subcommand(
      "validate",
      "cross-check closed forms against the independent grid solvers");
  add_common(validate_cmd, cc);
  CLI::Option* tol_opt =
      validate_cmd->add_option(
          "--tol", tol_flag,
          "relative tolerance for the reference spectrum check (default "
          "1e-6; PDM_SPECTRA_TOL overrides the default)")
          ->check(CLI::PositiveNumber);

  CLI::App* table1_cmd = app.add_subcommand(
      "table1", "literature-orderings survey recomputed, with discrepancies");
  add_common(table1_cmd, cc, /*needs_params=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(cc);
    if (spectrum_cmd->parsed()) return cmd_spectrum(cc);
    if (wave_cmd->parsed()) return cmd_wavefunction(cc, wo);
    if (pot_cmd->parsed()) return cmd_potential(cc, po);
    if (scatter_cmd->parsed()) return cmd_scatter(cc, so);
    if (validate_cmd->parsed())
      return cmd_validate(cc, tol_opt->count() > 0, tol_flag);
    if (table1_cmd->parsed()) return cmd_table1(cc);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
