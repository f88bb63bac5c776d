#pragma once

#include <string_view>

namespace barn {

enum class CubicMethod {
  kCardano,        // real-radical closed form
  kTrigonometric,  // cos / cosh form of the depressed cubic
  kBisection,      // bracketed fallback
};

std::string_view to_string(CubicMethod method);

struct CubicRoot {
  double root = 0.0;
  CubicMethod method = CubicMethod::kCardano;
  double residual = 0.0;  // |f(x)| / (|a| x^3 + |b| x^2 + |c|)
};

/// Relative residual of a x^3 + b x^2 + c at x.
double cubic_residual(double a, double b, double c, double x);

/// Unique positive root of a x^3 + b x^2 + c = 0 for a > 0, b > 0, c < 0.
///
/// f(0) = c < 0 and f' = 3 a x^2 + 2 b x > 0 on x > 0, so exactly one
/// positive root exists for every admissible triple. Cardano's radicals are
/// tried first; when the discriminant 4 a^2 b^3 c + 27 a^4 c^2 is negative
/// (three real roots) or the radical result is unusable, the trigonometric
/// form is used instead. The candidate receives one Newton step and, if its
/// relative residual still exceeds 1e-12, is replaced by bisection on
/// [0, min(cbrt(-c/a), sqrt(-c/b))].
///
/// Throws Error{kInvalidParameter} if the coefficient signs are wrong and
/// Error{kSolverFailure} if no method meets the residual bound.
CubicRoot solve_depressed_cubic(double a, double b, double c);

}  // namespace barn
