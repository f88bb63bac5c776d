#pragma once

#include "barnopt/cubic.hpp"
#include "barnopt/geometry.hpp"

namespace barn {

/// Minimal-envelope footprint for a prescribed floor area F = W L, wall
/// height and roof angle.
struct FixedFloorOptimum {
  double floor = 0.0;
  double height = 0.0;
  double alpha = 0.0;
  double width = 0.0;
  double length = 0.0;
  double surface_min = 0.0;
  double cubic_residual = 0.0;
  CubicMethod method = CubicMethod::kCardano;
  // H < tan(alpha) sqrt(27 F / 16). Equivalent to a non-negative Cardano
  // discriminant; reported only, the positive root is unique regardless.
  bool radical_condition = false;

  HouseParams params() const { return {width, length, height, alpha}; }
};

/// S(W) = 2WH + 2FH/W + F/cos(alpha) + W^2 tan(alpha)/2.
double surface_of_width(double width, double floor, double height, double alpha);

/// dS/dW = 2H - 2FH/W^2 + W tan(alpha).
double surface_of_width_derivative(double width, double floor, double height, double alpha);

/// Minimizer of S(W): the positive root of tan(a) W^3 + 2H W^2 - 2FH = 0.
FixedFloorOptimum optimize_fixed_floor(double floor, double height, double alpha);

}  // namespace barn
