#include "barnopt/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "barnopt/angles.hpp"

namespace barn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter:
      return "invalid parameter";
    case ErrorCode::kOutOfDomain:
      return "out of domain";
    case ErrorCode::kSolverFailure:
      return "solver failure";
  }
  return "unknown";
}

namespace detail {

void require_positive(double value, const char* param) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter, param,
                std::string(param) + " must be a positive finite number");
  }
}

}  // namespace detail

void require_solver_alpha(double alpha) {
  // Slack of a few ulps so that degree inputs at the window edges pass.
  constexpr double slack = 1e-12;
  if (!std::isfinite(alpha) || alpha < kAlphaMin - slack || alpha > kAlphaMax + slack) {
    throw Error(ErrorCode::kOutOfDomain, "alpha",
                "roof angle must lie in [0.5, 89.5] degrees");
  }
}

void require_geometric_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= std::numbers::pi / 2) {
    throw Error(ErrorCode::kOutOfDomain, "alpha",
                "roof angle must lie strictly between 0 and 90 degrees");
  }
}

}  // namespace barn
