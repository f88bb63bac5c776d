#include "barnopt/optimize_floor.hpp"

#include <cmath>

#include "barnopt/angles.hpp"
#include "barnopt/error.hpp"

namespace barn {

namespace {

void validate_floor_problem(double floor, double height, double alpha) {
  detail::require_positive(floor, "floor");
  detail::require_positive(height, "height");
  require_geometric_alpha(alpha);
}

}  // namespace

double surface_of_width(double width, double floor, double height, double alpha) {
  detail::require_positive(width, "width");
  validate_floor_problem(floor, height, alpha);
  return 2.0 * width * height + 2.0 * floor * height / width + floor / std::cos(alpha) +
         width * width * std::tan(alpha) / 2.0;
}

double surface_of_width_derivative(double width, double floor, double height, double alpha) {
  detail::require_positive(width, "width");
  validate_floor_problem(floor, height, alpha);
  return 2.0 * height - 2.0 * floor * height / (width * width) + width * std::tan(alpha);
}

FixedFloorOptimum optimize_fixed_floor(double floor, double height, double alpha) {
  detail::require_positive(floor, "floor");
  detail::require_positive(height, "height");
  require_solver_alpha(alpha);

  const double a = std::tan(alpha);
  const double b = 2.0 * height;
  const double c = -2.0 * floor * height;
  const CubicRoot root = solve_depressed_cubic(a, b, c);

  FixedFloorOptimum opt;
  opt.floor = floor;
  opt.height = height;
  opt.alpha = alpha;
  opt.width = root.root;
  opt.length = floor / root.root;
  opt.surface_min = surface_of_width(opt.width, floor, height, alpha);
  opt.cubic_residual = root.residual;
  opt.method = root.method;
  opt.radical_condition = height < a * std::sqrt(27.0 * floor / 16.0);
  return opt;
}

}  // namespace barn
