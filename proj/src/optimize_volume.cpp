#include "barnopt/optimize_volume.hpp"

#include <cmath>
#include <string>

#include "barnopt/angles.hpp"
#include "barnopt/error.hpp"

namespace barn {

OptimalRatios optimal_ratios(double alpha) {
  require_solver_alpha(alpha);
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  return {std::sqrt(sin_a + 0.25) + 0.5, (std::sqrt(4.0 * sin_a + 1.0) + 1.0) / (4.0 * cos_a)};
}

double min_surface_factor(double alpha) {
  require_solver_alpha(alpha);
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  const double root = std::sqrt(sin_a + 0.25);
  const double numer = 3.0 * sin_a + 6.0 * root + 3.0;
  const double inner = (2.0 * sin_a + 2.0 * root + 1.0) / (4.0 * cos_a);
  return numer / (2.0 * cos_a * std::pow(inner, 2.0 / 3.0));
}

FixedVolumeOptimum optimize_fixed_volume(double volume, double alpha) {
  detail::require_positive(volume, "volume");
  const auto [r, k] = optimal_ratios(alpha);

  // W = V^(1/3) * (4 cos a / (2 sin a + sqrt(4 sin a + 1) + 1))^(1/3)
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  const double width_factor =
      std::cbrt(4.0 * cos_a / (2.0 * sin_a + std::sqrt(4.0 * sin_a + 1.0) + 1.0));
  const double cube_root_v = std::cbrt(volume);

  FixedVolumeOptimum opt;
  opt.volume = volume;
  opt.alpha = alpha;
  opt.r_min = r;
  opt.k_min = k;
  opt.width = cube_root_v * width_factor;
  opt.length = cube_root_v * r * width_factor;
  opt.height = cube_root_v * k * width_factor;
  opt.surface_min = surface(opt.params()).total;

  const double closed_form = std::pow(volume, 2.0 / 3.0) * min_surface_factor(alpha);
  if (std::abs(opt.surface_min - closed_form) > 1e-9 * closed_form) {
    throw Error(ErrorCode::kSolverFailure, "surface",
                "closed-form minimal surface disagrees with recomputed envelope");
  }
  return opt;
}

std::pair<double, double> gamma_gradient(const ShapeRatios& s) {
  validate(s);
  const double r = s.r;
  const double k = s.k;
  const double sin_a = std::sin(s.alpha);
  const double cos_a = std::cos(s.alpha);
  const double denom = 3.0 * cos_a * std::pow(r * k, 5.0 / 3.0);
  const double d_r = k * (r - sin_a - 4.0 * k * cos_a + 2.0 * r * k * cos_a) / denom;
  const double d_k = -r * (2.0 * r + sin_a - 2.0 * k * cos_a - 2.0 * r * k * cos_a) / denom;
  return {d_r, d_k};
}

std::vector<FixedVolumeOptimum> alpha_sweep(double volume, std::span<const double> alphas) {
  detail::require_positive(volume, "volume");
  std::vector<FixedVolumeOptimum> out;
  out.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    try {
      out.push_back(optimize_fixed_volume(volume, alphas[i]));
    } catch (const Error& e) {
      throw Error(e.code(), "alphas[" + std::to_string(i) + "]",
                  "element " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace barn
