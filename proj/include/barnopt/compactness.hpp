#pragma once

#include "barnopt/geometry.hpp"
#include "barnopt/optimize_volume.hpp"

namespace barn {

/// Compactness S / S_min of a design against the best barn of the same
/// volume and roof angle.
struct CompactnessReport {
  HouseParams design;
  double surface = 0.0;
  double volume = 0.0;
  double surface_min = 0.0;
  double ratio = 0.0;     // S / S_min, >= 1
  double headroom = 0.0;  // S - S_min, m^2
  FixedVolumeOptimum optimum;
};

/// Reported ratio is surface(p) / S_min. It is cross-checked against the
/// factorized shape-only form and kSolverFailure is thrown if the two paths
/// disagree by more than 1e-9 relative.
CompactnessReport compactness(const HouseParams& p);

/// The alpha-only factor that turns gamma(r, k) into S / S_min.
double compactness_alpha_factor(double alpha);

/// Volume-free compactness of a shape: gamma(r, k) * compactness_alpha_factor(alpha).
double compactness_of_shape(const ShapeRatios& s);

struct ScaleCheck {
  double ratio_original = 0.0;
  double ratio_scaled = 0.0;
  bool invariant = false;  // |scaled - original| <= 1e-9 * original
};

ScaleCheck compactness_is_scale_free(const HouseParams& p, double factor);

}  // namespace barn
