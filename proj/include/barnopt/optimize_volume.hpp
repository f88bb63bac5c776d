#pragma once

#include <span>
#include <utility>
#include <vector>

#include "barnopt/geometry.hpp"

namespace barn {

/// Minimal-envelope design for a prescribed volume and roof angle.
struct FixedVolumeOptimum {
  double volume = 0.0;
  double alpha = 0.0;
  double r_min = 0.0;
  double k_min = 0.0;
  double width = 0.0;
  double length = 0.0;
  double height = 0.0;
  double surface_min = 0.0;

  HouseParams params() const { return {width, length, height, alpha}; }
};

struct OptimalRatios {
  double r = 0.0;
  double k = 0.0;
};

/// Stationary point of gamma for roof angle alpha:
///   r = sqrt(sin a + 1/4) + 1/2,  k = (sqrt(4 sin a + 1) + 1) / (4 cos a).
OptimalRatios optimal_ratios(double alpha);

/// Closed-form minimal envelope constant S_min / V^(2/3) for roof angle alpha.
double min_surface_factor(double alpha);

/// Closed-form optimum. The reported surface is recomputed from the optimal
/// dimensions and must agree with min_surface_factor(alpha) * V^(2/3) to 1e-9
/// relative; otherwise kSolverFailure is thrown.
FixedVolumeOptimum optimize_fixed_volume(double volume, double alpha);

/// Analytic partial derivatives (d gamma / dr, d gamma / dk).
std::pair<double, double> gamma_gradient(const ShapeRatios& s);

/// Element-wise optimize_fixed_volume. An out-of-domain angle throws an Error
/// whose param is "alphas[i]".
std::vector<FixedVolumeOptimum> alpha_sweep(double volume, std::span<const double> alphas);

}  // namespace barn
