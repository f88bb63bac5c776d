#pragma once

#include <numbers>

namespace barn {

constexpr double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

// Roof-angle window accepted by the optimizers, field generators and oracle.
// The geometric formulas themselves accept the open interval (0, pi/2).
inline constexpr double kAlphaMinDeg = 0.5;
inline constexpr double kAlphaMaxDeg = 89.5;
inline constexpr double kAlphaMin = deg_to_rad(kAlphaMinDeg);
inline constexpr double kAlphaMax = deg_to_rad(kAlphaMaxDeg);

// Throws Error{kOutOfDomain, "alpha"} unless alpha lies in [kAlphaMin, kAlphaMax].
void require_solver_alpha(double alpha);

// Throws Error{kOutOfDomain, "alpha"} unless 0 < alpha < pi/2.
void require_geometric_alpha(double alpha);

}  // namespace barn
