#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace barn {

// Brute-force checks for the closed forms. The searches evaluate only gamma
// and the envelope; they never call the closed-form optimizers.

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int resolution = 0;  // samples per axis, log-spaced on [lo, hi]
};

struct OracleResult {
  std::vector<double> argmin;  // (r, k) or (W)
  double min_value = 0.0;
  double grid_min_value = 0.0;  // best sampled grid value
  GridSpec grid;
  int refinement_iterations = 0;
  bool converged = false;
};

/// Log-spaced sample i of n on [lo, hi]; endpoints are exact.
double log_grid_node(double lo, double hi, int n, int i);

/// Minimum of gamma over the square grid [lo, hi]^2 followed by Nelder-Mead
/// refinement in (ln r, ln k). Stops when the simplex diameter in log space
/// drops below 1e-9 (converged) or after 500 iterations.
/// Grid ties resolve to the lowest r, then the lowest k.
OracleResult brute_force_gamma_min(double alpha, const GridSpec& grid = {0.05, 20.0, 400});

/// Minimum of S(W) over a log-spaced W grid followed by golden-section
/// search on the bracketing cells until the interval width is below 1e-10
/// relative. Ties resolve to the lowest W.
OracleResult brute_force_floor_min(double floor, double height, double alpha,
                                   const GridSpec& grid);

/// Default W grid: [0.01 sqrt(F), 100 sqrt(F)] with 4096 samples.
GridSpec default_floor_grid(double floor);

/// 2D Nelder-Mead with reflection 1, expansion 2, contraction 0.5, shrink 0.5.
struct SimplexResult {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

template <typename F>
SimplexResult nelder_mead_2d(F&& f, double x0, double y0, double step, double tol,
                             int max_iter);

/// Golden-section search on [lo, hi]; stops when (hi - lo) <= rel_tol * |mid|.
struct LineSearchResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

template <typename F>
LineSearchResult golden_section(F&& f, double lo, double hi, double rel_tol, int max_iter);

// ---------------------------------------------------------------------------
// Verification harness behind the `verify` subcommand.

struct VerifyOptions {
  std::uint64_t seed = 42;
  int cases = 25;
  double tolerance = 1e-6;
  // Multiplies every closed-form value before comparison. Only used to
  // exercise the failure path.
  double perturbation = 1.0;
};

struct VolumeCaseReport {
  double volume = 0.0;
  double alpha = 0.0;
  double r_closed = 0.0, k_closed = 0.0, s_closed = 0.0;
  double r_oracle = 0.0, k_oracle = 0.0, s_oracle = 0.0;
  double max_rel_error = 0.0;
  int iterations = 0;
  bool converged = false;
  bool closed_form_not_beaten = false;
  bool pass = false;
};

struct FloorCaseReport {
  double floor = 0.0;
  double height = 0.0;
  double alpha = 0.0;
  double w_closed = 0.0, s_closed = 0.0;
  double w_oracle = 0.0, s_oracle = 0.0;
  double max_rel_error = 0.0;
  int iterations = 0;
  bool converged = false;
  bool pass = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VolumeCaseReport> volume_cases;
  std::vector<FloorCaseReport> floor_cases;
  bool all_pass = false;
};

/// Draws `cases` random fixed-volume and fixed-floor problems from a
/// mt19937_64 seeded with options.seed and compares closed forms with the
/// oracle. Volume in [10, 5000] m^3, floor in [20, 2000] m^2, height in
/// [2, 12] m, alpha in [0.5, 85] degrees.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace barn

#include "barnopt/oracle_impl.hpp"
