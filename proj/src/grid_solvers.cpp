#include "pdmwell/grid_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pdmwell/errors.hpp"

namespace pdmwell {
namespace {

void check_grid(const GridSpec& g) {
  if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || !(g.lo < g.hi))
    throw std::invalid_argument("grid span must be finite and increasing");
  if (g.points < 3 || g.points % 2 == 0)
    throw std::invalid_argument("grid needs an odd point count >= 3");
  if (std::abs(g.lo + g.hi) > 1e-12 * (g.hi - g.lo))
    throw std::invalid_argument("grid span must be symmetric about zero");
}

void check_levels(const GridSpec& g, int k_levels) {
  if (k_levels < 1 || k_levels > g.points - 2)
    throw std::invalid_argument("requested level count exceeds interior size");
}

// Number of eigenvalues of the symmetric tridiagonal matrix (diag d,
// off-diagonal e) strictly below x, by the sign count of the LDL^T pivots.
int count_below(const std::vector<double>& d, const std::vector<double>& e2,
                double pivmin, double x) {
  int count = 0;
  double t = d[0] - x;
  if (t < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (std::abs(t) < pivmin) t = -pivmin;
    t = d[i] - x - e2[i - 1] / t;
    if (t < 0.0) ++count;
  }
  return count;
}

// Lowest k eigenvalues by bisection on the Sturm count.
std::vector<double> lowest_eigenvalues(const std::vector<double>& d,
                                       const std::vector<double>& e, int k) {
  const std::size_t m = d.size();
  std::vector<double> e2(e.size());
  double max_e2 = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e2[i] = e[i] * e[i];
    max_e2 = std::max(max_e2, e2[i]);
  }
  const double pivmin =
      std::numeric_limits<double>::min() * std::max(1.0, max_e2);

  double glo = std::numeric_limits<double>::infinity();
  double ghi = -glo;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) +
                     (i + 1 < m ? std::abs(e[i]) : 0.0);
    glo = std::min(glo, d[i] - r);
    ghi = std::max(ghi, d[i] + r);
  }
  const double pad = 1e-10 * (ghi - glo) + 1e-30;
  glo -= pad;
  ghi += pad;

  std::vector<double> eigs(k);
  for (int j = 0; j < k; ++j) {
    double lo = glo, hi = ghi;
    for (int iter = 0; iter < 200; ++iter) {
      const double tol = 1e-14 * std::max({1.0, std::abs(lo), std::abs(hi)});
      if (hi - lo <= tol) break;
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // bisection exhausted the format
      if (count_below(d, e2, pivmin, mid) >= j + 1)
        hi = mid;
      else
        lo = mid;
    }
    eigs[j] = 0.5 * (lo + hi);
  }
  return eigs;
}

// One interior eigenvector by inverse iteration at the converged shift,
// using a partially pivoted LU of the shifted tridiagonal matrix.
std::vector<double> inverse_iteration(const std::vector<double>& d,
                                      const std::vector<double>& e,
                                      double sigma, int seed_tag) {
  const std::size_t m = d.size();
  std::vector<double> bb(m), cc(m > 1 ? m - 1 : 0), c2(m > 2 ? m - 2 : 0, 0.0);
  std::vector<double> lmul(m > 1 ? m - 1 : 0);
  std::vector<char> swapped(m > 1 ? m - 1 : 0, 0);
  for (std::size_t i = 0; i < m; ++i) bb[i] = d[i] - sigma;
  for (std::size_t i = 0; i + 1 < m; ++i) cc[i] = e[i];
  const double tiny = 1e-290;

  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double sub = e[i];
    if (std::abs(bb[i]) >= std::abs(sub)) {
      if (bb[i] == 0.0) bb[i] = tiny;
      const double l = sub / bb[i];
      lmul[i] = l;
      bb[i + 1] -= l * cc[i];
    } else {
      const double l = bb[i] / sub;
      lmul[i] = l;
      swapped[i] = 1;
      const double old_super = cc[i];
      const double diag_next = bb[i + 1];
      const double super_next = (i + 2 < m) ? cc[i + 1] : 0.0;
      bb[i] = sub;
      cc[i] = diag_next;
      if (i + 2 < m) {
        c2[i] = super_next;
        cc[i + 1] = -l * super_next;
      }
      bb[i + 1] = old_super - l * diag_next;
    }
  }
  if (bb[m - 1] == 0.0) bb[m - 1] = tiny;

  // Deterministic full-spectrum seed.
  std::vector<double> v(m);
  unsigned long long state = 12345ull + static_cast<unsigned>(seed_tag);
  for (std::size_t i = 0; i < m; ++i) {
    state = (1103515245ull * state + 12345ull) % 2147483648ull;
    v[i] = static_cast<double>(state) / 2147483648.0 - 0.5;
  }

  for (int sweep = 0; sweep < 3; ++sweep) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (swapped[i]) std::swap(v[i], v[i + 1]);
      v[i + 1] -= lmul[i] * v[i];
    }
    for (std::size_t i = m; i-- > 0;) {
      double acc = v[i];
      if (i + 1 < m) acc -= cc[i] * v[i + 1];
      if (i + 2 < m) acc -= c2[i] * v[i + 2];
      v[i] = acc / bb[i];
    }
    double peak = 0.0;
    for (const double x : v) peak = std::max(peak, std::abs(x));
    if (peak > 0.0)
      for (double& x : v) x /= peak;
  }
  return v;
}

// Shared dense part of both solvers: eigenvalues, vectors with boundary
// zeros, trapezoid normalization, deterministic sign.
EigenResult assemble_result(const GridSpec& g, const std::vector<double>& d,
                            const std::vector<double>& e, int k_levels) {
  EigenResult r;
  r.grid = g;
  r.energies = lowest_eigenvalues(d, e, k_levels);
  const double h = g.spacing();
  r.vectors.reserve(k_levels);
  for (int j = 0; j < k_levels; ++j) {
    const std::vector<double> interior =
        inverse_iteration(d, e, r.energies[j], j);
    std::vector<double> full(g.points, 0.0);
    double sq = 0.0;
    for (std::size_t i = 0; i < interior.size(); ++i) {
      full[i + 1] = interior[i];
      sq += interior[i] * interior[i];
    }
    const double scale = 1.0 / std::sqrt(h * sq);
    for (double& x : full) x *= scale;
    std::size_t peak = 0;
    for (std::size_t i = 1; i < full.size(); ++i)
      if (std::abs(full[i]) > std::abs(full[peak])) peak = i;
    if (full[peak] < 0.0)
      for (double& x : full) x = -x;
    r.vectors.push_back(std::move(full));
  }
  return r;
}

void verify_by_doubling(const EigenResult& base, double mu,
                        const SolveOptions& opts,
                        const std::function<EigenResult(const GridSpec&)>&
                            resolve) {
  const GridSpec doubled{base.grid.lo, base.grid.hi, 2 * base.grid.points - 1};
  const EigenResult fine = resolve(doubled);
  for (std::size_t j = 0; j < base.energies.size(); ++j) {
    if (std::abs(base.energies[j] - fine.energies[j]) >
        opts.grid_shift_tol * mu * mu)
      throw GridTooCoarse("eigenvalue moved under grid doubling");
  }
}

}  // namespace

GridSpec symmetric_grid(double half_span, int points) {
  if (!(half_span > 0.0) || !std::isfinite(half_span))
    throw std::invalid_argument("half_span must be positive and finite");
  const GridSpec g{-half_span, half_span, points};
  check_grid(g);
  return g;
}

std::pair<GridSpec, GridSpec> x_grid_pair(const WellSpec& w,
                                          int coarse_points) {
  if (coarse_points < 23 || coarse_points % 2 == 0)
    throw std::invalid_argument("coarse grid needs an odd point count >= 23");
  // margin = 10 h_coarse with h_coarse = 2 (L - margin) / (points - 1)
  const double margin = 20.0 * w.half_width / (coarse_points + 19);
  const double edge = w.half_width - margin;
  return {GridSpec{-edge, edge, coarse_points},
          GridSpec{-edge, edge, 2 * coarse_points - 1}};
}

EigenResult solve_q_space(const Couplings& c, const WellSpec& w,
                          const GridSpec& g, int k_levels,
                          const SolveOptions& opts) {
  if (!c.lambda)
    throw LambdaUndefined("depth parameter undefined for this ordering");
  check_grid(g);
  check_levels(g, k_levels);
  if (g.hi < 8.0 * w.half_width * (1.0 - 1e-12))
    throw std::invalid_argument("mapped-problem span must reach 8 L");

  const std::function<EigenResult(const GridSpec&)> run =
      [&](const GridSpec& grid) {
        const double h = grid.spacing();
        const double offset =
            w.mu * w.mu * c.shift_coefficient;  // reported below the raw op
        const int m = grid.points - 2;
        std::vector<double> d(m), e(m > 1 ? m - 1 : 0, -1.0 / (h * h));
        for (int i = 0; i < m; ++i) {
          const double q = grid.lo + (i + 1) * h;
          d[i] = 2.0 / (h * h) + v_eff_closed(w, c, q) - offset;
        }
        return assemble_result(grid, d, e, k_levels);
      };

  EigenResult result = run(g);
  if (opts.verify_grid) verify_by_doubling(result, w.mu, opts, run);
  return result;
}

EigenResult solve_x_space(const OrderingParams& o, const WellSpec& w,
                          const GridSpec& g, int k_levels,
                          const SolveOptions& opts) {
  check_grid(g);
  check_levels(g, k_levels);
  const double h0 = g.spacing();
  if (w.half_width - g.hi < 10.0 * h0 * (1.0 - 1e-9))
    throw std::invalid_argument(
        "well grid must stop ten spacings short of the walls");

  const std::function<EigenResult(const GridSpec&)> run =
      [&](const GridSpec& grid) {
        const double h = grid.spacing();
        const int m = grid.points - 2;
        // Inverse mass at half points: p = (1 - (x/L)^2)^2, formed directly
        // so the stencil stays finite arbitrarily close to the walls.
        const auto p_half = [&](int j) {
          const double x = grid.lo + (j + 0.5) * h;
          const double s = x / w.half_width;
          const double u = (1.0 - s) * (1.0 + s);
          return u * u;
        };
        std::vector<double> d(m), e(m > 1 ? m - 1 : 0);
        for (int i = 0; i < m; ++i) {
          const double x = grid.lo + (i + 1) * h;
          d[i] = (p_half(i) + p_half(i + 1)) / (h * h) + v_tilde(w, o, x);
          if (i + 1 < m) e[i] = -p_half(i + 1) / (h * h);
        }
        return assemble_result(grid, d, e, k_levels);
      };

  EigenResult result = run(g);
  if (opts.verify_grid) verify_by_doubling(result, w.mu, opts, run);
  return result;
}

EigenResult refine(const EigenResult& coarse, const EigenResult& fine,
                   int richardson_order) {
  if (richardson_order < 1)
    throw std::invalid_argument("richardson_order must be >= 1");
  const double span = fine.grid.hi - fine.grid.lo;
  if (std::abs(coarse.grid.lo - fine.grid.lo) > 1e-12 * span ||
      std::abs(coarse.grid.hi - fine.grid.hi) > 1e-12 * span)
    throw GridMismatch("grid spans differ");
  if (fine.grid.points != 2 * coarse.grid.points - 1)
    throw GridMismatch("fine grid must double the coarse grid");
  if (coarse.energies.size() != fine.energies.size())
    throw GridMismatch("level counts differ");

  EigenResult out;
  out.grid = fine.grid;
  out.vectors = fine.vectors;
  const double factor = std::ldexp(1.0, richardson_order);
  out.energies.reserve(fine.energies.size());
  for (std::size_t j = 0; j < fine.energies.size(); ++j)
    out.energies.push_back(
        (factor * fine.energies[j] - coarse.energies[j]) / (factor - 1.0));
  return out;
}

ScatterResult reflection(const Couplings& c, const WellSpec& w, double k,
                         const ScatterOptions& opts) {
  if (!c.lambda)
    throw LambdaUndefined("depth parameter undefined for this ordering");
  if (!(k > 0.0) || !std::isfinite(k))
    throw InvalidScale("wavenumber must be positive and finite");
  const double mu = w.mu;
  const double lambda = *c.lambda;
  const double strength = lambda * (lambda - 1.0) * mu * mu;

  double big = 12.0 / mu;
  if (opts.q_max != 0.0) {
    if (!(opts.q_max >= big))
      throw std::invalid_argument("q_max must be at least 12 / mu");
    big = opts.q_max;
  }
  double h = std::min(0.001 / mu, 0.01 / k);
  if (opts.step != 0.0) {
    if (!(opts.step > 0.0) || !std::isfinite(opts.step))
      throw std::invalid_argument("step must be positive");
    h = opts.step;
  }
  const long long steps =
      static_cast<long long>(std::ceil(2.0 * big / h));
  const double s = -2.0 * big / static_cast<double>(steps);

  using cplx = std::complex<double>;
  const auto rhs = [&](double q, const cplx& y0, const cplx& y1) {
    const double sech = 1.0 / std::cosh(mu * q);
    const double u = -strength * sech * sech - k * k;
    return std::pair<cplx, cplx>(y1, u * y0);
  };

  const cplx ik(0.0, k);
  cplx y0 = std::exp(ik * big);  // transmitted wave, unit amplitude
  cplx y1 = ik * y0;
  for (long long i = 0; i < steps; ++i) {
    const double q = big + static_cast<double>(i) * s;
    const auto [a0, a1] = rhs(q, y0, y1);
    const auto [b0, b1] = rhs(q + 0.5 * s, y0 + 0.5 * s * a0, y1 + 0.5 * s * a1);
    const auto [c0, c1] = rhs(q + 0.5 * s, y0 + 0.5 * s * b0, y1 + 0.5 * s * b1);
    const auto [d0, d1] = rhs(q + s, y0 + s * c0, y1 + s * c1);
    y0 += s / 6.0 * (a0 + 2.0 * b0 + 2.0 * c0 + d0);
    y1 += s / 6.0 * (a1 + 2.0 * b1 + 2.0 * c1 + d1);
  }

  const cplx a_coef = 0.5 * (y0 + y1 / ik) * std::exp(ik * big);
  const cplx b_coef = 0.5 * (y0 - y1 / ik) * std::exp(-ik * big);
  ScatterResult out;
  out.k = k;
  out.reflection_prob = std::norm(b_coef) / std::norm(a_coef);
  out.transmission_prob = 1.0 / std::norm(a_coef);
  if (std::abs(out.reflection_prob + out.transmission_prob - 1.0) > 1e-6)
    throw NumericalInstability("scattering flux failed to balance");
  return out;
}

}  // namespace pdmwell
