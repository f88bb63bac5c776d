#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "barnopt/angles.hpp"

namespace barn::testing {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline double deg(double d) { return deg_to_rad(d); }

/// Central finite difference, independent of any analytic derivative.
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Plain bisection for the root of an increasing function on [lo, hi].
inline double bisect_increasing(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct Rng {
  std::mt19937_64 engine{20260101};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  double alpha() { return uniform(kAlphaMin, kAlphaMax); }
};

}  // namespace barn::testing
