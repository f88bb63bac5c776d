#include "barnopt/cubic.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "barnopt/error.hpp"

namespace barn {

namespace {

constexpr double kResidualTolerance = 1e-12;

double eval(double a, double b, double c, double x) { return (a * x + b) * x * x + c; }

// Radical form of the real root:
//   x = -b/(3a) + 2^(1/3) b^2 / (3a M) + M / (3a 2^(1/3)),
//   M = cbrt(-2b^3 - 27a^2 c + 3 sqrt(3) sqrt(4a^2 b^3 c + 27a^4 c^2)).
std::optional<double> cardano(double a, double b, double c) {
  const double disc = 4.0 * a * a * b * b * b * c + 27.0 * a * a * a * a * c * c;
  if (!(disc >= 0.0)) {
    return std::nullopt;
  }
  const double m = std::cbrt(-2.0 * b * b * b - 27.0 * a * a * c +
                             3.0 * std::sqrt(3.0) * std::sqrt(disc));
  if (!std::isfinite(m) || m == 0.0) {
    return std::nullopt;
  }
  const double cbrt2 = std::cbrt(2.0);
  const double x = -b / (3.0 * a) + cbrt2 * b * b / (3.0 * a * m) + m / (3.0 * a * cbrt2);
  if (!std::isfinite(x) || x <= 0.0) {
    return std::nullopt;
  }
  return x;
}

// Largest real root of the depressed form t^3 + p t + q = 0, x = t - b/(3a).
// p = -b^2 / (3 a^2) is always negative here.
std::optional<double> trigonometric(double a, double b, double c) {
  const double shift = b / (3.0 * a);
  const double p = -b * b / (3.0 * a * a);
  const double q = 2.0 * b * b * b / (27.0 * a * a * a) + c / a;
  const double m = 2.0 * std::sqrt(-p / 3.0);
  const double arg = 3.0 * q / (p * m);  // = (3q / 2p) sqrt(-3/p)

  double t = 0.0;
  if (std::abs(arg) <= 1.0) {
    t = m * std::cos(std::acos(arg) / 3.0);
  } else if (arg < -1.0) {
    // One real root, q > 0.
    t = -m * std::cosh(std::acosh(-arg) / 3.0);
  } else {
    t = m * std::cosh(std::acosh(arg) / 3.0);
  }
  const double x = t - shift;
  if (!std::isfinite(x) || x <= 0.0) {
    return std::nullopt;
  }
  return x;
}

double newton_step(double a, double b, double c, double x) {
  const double df = (3.0 * a * x + 2.0 * b) * x;
  if (df <= 0.0) {
    return x;
  }
  const double next = x - eval(a, b, c, x) / df;
  return next > 0.0 && std::isfinite(next) ? next : x;
}

double bisection(double a, double b, double c) {
  double lo = 0.0;
  double hi = std::min(std::cbrt(-c / a), std::sqrt(-c / b));
  for (int i = 0; i < 2000; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (eval(a, b, c, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(eval(a, b, c, lo)) < std::abs(eval(a, b, c, hi)) && lo > 0.0 ? lo : hi;
}

}  // namespace

std::string_view to_string(CubicMethod method) {
  switch (method) {
    case CubicMethod::kCardano:
      return "cardano";
    case CubicMethod::kTrigonometric:
      return "trigonometric";
    case CubicMethod::kBisection:
      return "bisection";
  }
  return "unknown";
}

double cubic_residual(double a, double b, double c, double x) {
  const double scale = std::abs(a) * x * x * x + std::abs(b) * x * x + std::abs(c);
  return std::abs(eval(a, b, c, x)) / scale;
}

CubicRoot solve_depressed_cubic(double a, double b, double c) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "a", "cubic coefficient a must be positive");
  }
  if (!std::isfinite(b) || b <= 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "b", "cubic coefficient b must be positive");
  }
  if (!std::isfinite(c) || c >= 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "c", "cubic coefficient c must be negative");
  }

  const auto accept = [&](double x, CubicMethod method) -> std::optional<CubicRoot> {
    x = newton_step(a, b, c, x);
    const double res = cubic_residual(a, b, c, x);
    if (res <= kResidualTolerance) {
      return CubicRoot{x, method, res};
    }
    return std::nullopt;
  };

  if (auto x = cardano(a, b, c)) {
    if (auto root = accept(*x, CubicMethod::kCardano)) {
      return *root;
    }
  }
  if (auto x = trigonometric(a, b, c)) {
    if (auto root = accept(*x, CubicMethod::kTrigonometric)) {
      return *root;
    }
  }
  const double x = bisection(a, b, c);
  const double res = cubic_residual(a, b, c, x);
  if (res <= kResidualTolerance) {
    return {x, CubicMethod::kBisection, res};
  }
  throw Error(ErrorCode::kSolverFailure, "cubic", "no root met the residual tolerance");
}

}  // namespace barn
