#include "barnopt/compactness.hpp"

#include <cmath>

#include "barnopt/angles.hpp"
#include "barnopt/error.hpp"

namespace barn {

double compactness_alpha_factor(double alpha) {
  require_solver_alpha(alpha);
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  const double root = std::sqrt(sin_a + 0.25);
  const double inner = (2.0 * sin_a + 2.0 * root + 1.0) / (4.0 * cos_a);
  return std::pow(inner, 2.0 / 3.0) * 2.0 * cos_a / (3.0 * sin_a + 6.0 * root + 3.0);
}

double compactness_of_shape(const ShapeRatios& s) {
  return gamma(s) * compactness_alpha_factor(s.alpha);
}

CompactnessReport compactness(const HouseParams& p) {
  validate(p);
  require_solver_alpha(p.alpha);

  CompactnessReport rep;
  rep.design = p;
  rep.volume = volume(p);
  rep.surface = surface(p).total;
  rep.optimum = optimize_fixed_volume(rep.volume, p.alpha);
  rep.surface_min = rep.optimum.surface_min;
  rep.ratio = rep.surface / rep.surface_min;
  rep.headroom = rep.surface - rep.surface_min;

  const double factorized = compactness_of_shape(ratios_from_params(p));
  if (std::abs(factorized - rep.ratio) > 1e-9 * rep.ratio) {
    throw Error(ErrorCode::kSolverFailure, "ratio",
                "direct and factorized compactness disagree");
  }
  return rep;
}

ScaleCheck compactness_is_scale_free(const HouseParams& p, double factor) {
  ScaleCheck check;
  check.ratio_original = compactness(p).ratio;
  check.ratio_scaled = compactness(scaled(p, factor)).ratio;
  check.invariant =
      std::abs(check.ratio_scaled - check.ratio_original) <= 1e-9 * check.ratio_original;
  return check;
}

}  // namespace barn
