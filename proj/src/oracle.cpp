#include "barnopt/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "barnopt/angles.hpp"
#include "barnopt/error.hpp"
#include "barnopt/geometry.hpp"
#include "barnopt/optimize_floor.hpp"
#include "barnopt/optimize_volume.hpp"

namespace barn {

namespace {

constexpr int kMinResolution = 64;
constexpr double kSimplexTolerance = 1e-9;
constexpr int kSimplexMaxIterations = 500;
constexpr double kGoldenTolerance = 1e-10;
constexpr int kGoldenMaxIterations = 500;

void validate_grid(const GridSpec& grid) {
  detail::require_positive(grid.lo, "grid.lo");
  detail::require_positive(grid.hi, "grid.hi");
  if (grid.hi <= grid.lo) {
    throw Error(ErrorCode::kInvalidParameter, "grid.hi", "grid upper bound must exceed lower");
  }
  if (grid.resolution < kMinResolution) {
    throw Error(ErrorCode::kInvalidParameter, "grid.resolution",
                "oracle grid needs at least 64 samples per axis");
  }
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

double log_grid_node(double lo, double hi, int n, int i) {
  if (i <= 0) return lo;
  if (i >= n - 1) return hi;
  return lo * std::exp(std::log(hi / lo) * static_cast<double>(i) / static_cast<double>(n - 1));
}

GridSpec default_floor_grid(double floor) {
  detail::require_positive(floor, "floor");
  const double root = std::sqrt(floor);
  return {0.01 * root, 100.0 * root, 4096};
}

OracleResult brute_force_gamma_min(double alpha, const GridSpec& grid) {
  require_solver_alpha(alpha);
  validate_grid(grid);
  const int n = grid.resolution;

  std::vector<double> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = log_grid_node(grid.lo, grid.hi, n, i);

  double best = std::numeric_limits<double>::infinity();
  double best_r = 0.0;
  double best_k = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double g = gamma({nodes[i], nodes[j], alpha});
      if (g < best) {
        best = g;
        best_r = nodes[i];
        best_k = nodes[j];
      }
    }
  }

  const auto objective = [alpha](double u, double v) {
    return gamma({std::exp(u), std::exp(v), alpha});
  };
  const double step = std::log(grid.hi / grid.lo) / (n - 1);
  const SimplexResult nm = nelder_mead_2d(objective, std::log(best_r), std::log(best_k), step,
                                          kSimplexTolerance, kSimplexMaxIterations);

  OracleResult out;
  out.grid = grid;
  out.grid_min_value = best;
  out.refinement_iterations = nm.iterations;
  out.converged = nm.converged;
  if (nm.value <= best) {
    out.argmin = {std::exp(nm.x), std::exp(nm.y)};
    out.min_value = nm.value;
  } else {
    out.argmin = {best_r, best_k};
    out.min_value = best;
  }
  return out;
}

OracleResult brute_force_floor_min(double floor, double height, double alpha,
                                   const GridSpec& grid) {
  detail::require_positive(floor, "floor");
  detail::require_positive(height, "height");
  require_solver_alpha(alpha);
  validate_grid(grid);
  const int n = grid.resolution;

  // Evaluated through the generic envelope with L = F / W.
  const auto s_of_w = [&](double w) { return surface({w, floor / w, height, alpha}).total; };

  int best_i = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double v = s_of_w(log_grid_node(grid.lo, grid.hi, n, i));
    if (v < best) {
      best = v;
      best_i = i;
    }
  }

  const double lo = log_grid_node(grid.lo, grid.hi, n, std::max(best_i - 1, 0));
  const double hi = log_grid_node(grid.lo, grid.hi, n, std::min(best_i + 1, n - 1));
  const LineSearchResult gs =
      golden_section(s_of_w, lo, hi, kGoldenTolerance, kGoldenMaxIterations);

  OracleResult out;
  out.grid = grid;
  out.grid_min_value = best;
  out.refinement_iterations = gs.iterations;
  out.converged = gs.converged;
  if (gs.value <= best) {
    out.argmin = {gs.x};
    out.min_value = gs.value;
  } else {
    out.argmin = {log_grid_node(grid.lo, grid.hi, n, best_i)};
    out.min_value = best;
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.cases < 1) {
    throw Error(ErrorCode::kInvalidParameter, "cases", "cases must be at least 1");
  }
  detail::require_positive(options.tolerance, "tolerance");

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> volume_dist(10.0, 5000.0);
  std::uniform_real_distribution<double> floor_dist(20.0, 2000.0);
  std::uniform_real_distribution<double> height_dist(2.0, 12.0);
  std::uniform_real_distribution<double> alpha_dist(kAlphaMin, deg_to_rad(85.0));
  const double perturb = options.perturbation;

  VerifyReport report;
  report.options = options;
  report.all_pass = true;

  for (int i = 0; i < options.cases; ++i) {
    VolumeCaseReport c;
    c.volume = volume_dist(rng);
    c.alpha = alpha_dist(rng);
    const FixedVolumeOptimum opt = optimize_fixed_volume(c.volume, c.alpha);
    const OracleResult orc = brute_force_gamma_min(c.alpha);
    const double scale = std::pow(c.volume, 2.0 / 3.0);

    c.r_closed = opt.r_min * perturb;
    c.k_closed = opt.k_min * perturb;
    c.s_closed = opt.surface_min * perturb;
    c.r_oracle = orc.argmin[0];
    c.k_oracle = orc.argmin[1];
    c.s_oracle = scale * orc.min_value;
    c.iterations = orc.refinement_iterations;
    c.converged = orc.converged;
    c.max_rel_error = std::max({rel_err(c.r_oracle, c.r_closed), rel_err(c.k_oracle, c.k_closed),
                                rel_err(c.s_oracle, c.s_closed)});
    c.closed_form_not_beaten = orc.min_value >= gamma({opt.r_min, opt.k_min, c.alpha}) - 1e-12;
    c.pass = c.max_rel_error <= options.tolerance && c.closed_form_not_beaten;
    report.all_pass = report.all_pass && c.pass;
    report.volume_cases.push_back(c);
  }

  for (int i = 0; i < options.cases; ++i) {
    FloorCaseReport c;
    c.floor = floor_dist(rng);
    c.height = height_dist(rng);
    c.alpha = alpha_dist(rng);
    const FixedFloorOptimum opt = optimize_fixed_floor(c.floor, c.height, c.alpha);
    const OracleResult orc =
        brute_force_floor_min(c.floor, c.height, c.alpha, default_floor_grid(c.floor));

    c.w_closed = opt.width * perturb;
    c.s_closed = opt.surface_min * perturb;
    c.w_oracle = orc.argmin[0];
    c.s_oracle = orc.min_value;
    c.iterations = orc.refinement_iterations;
    c.converged = orc.converged;
    c.max_rel_error = std::max(rel_err(c.w_oracle, c.w_closed), rel_err(c.s_oracle, c.s_closed));
    c.pass = c.max_rel_error <= options.tolerance;
    report.all_pass = report.all_pass && c.pass;
    report.floor_cases.push_back(c);
  }
  return report;
}

}  // namespace barn
