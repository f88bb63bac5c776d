#include "barnopt/geometry.hpp"

#include <cmath>

#include "barnopt/angles.hpp"
#include "barnopt/error.hpp"

namespace barn {

void validate(const HouseParams& p) {
  detail::require_positive(p.width, "width");
  detail::require_positive(p.length, "length");
  detail::require_positive(p.height, "height");
  require_geometric_alpha(p.alpha);
}

void validate(const ShapeRatios& s) {
  detail::require_positive(s.r, "r");
  detail::require_positive(s.k, "k");
  require_geometric_alpha(s.alpha);
}

double volume(const HouseParams& p) {
  validate(p);
  return p.width * p.length * p.height;
}

double floor_area(const HouseParams& p) {
  validate(p);
  return p.width * p.length;
}

EnvelopeBreakdown surface(const HouseParams& p) {
  validate(p);
  EnvelopeBreakdown e;
  e.walls_long = 2.0 * p.length * p.height;
  e.walls_short = 2.0 * p.width * p.height;
  e.roof = p.length * p.width / std::cos(p.alpha);
  e.gables = p.width * p.width * std::tan(p.alpha) / 2.0;
  e.total = e.walls_short + e.walls_long + e.roof + e.gables;
  return e;
}

ShapeRatios ratios_from_params(const HouseParams& p) {
  validate(p);
  return {p.length / p.width, p.height / p.width, p.alpha};
}

HouseParams params_from_ratios(const ShapeRatios& s, double volume) {
  validate(s);
  detail::require_positive(volume, "volume");
  const double w = std::cbrt(volume / (s.r * s.k));
  return {w, w * s.r, w * s.k, s.alpha};
}

double gamma(const ShapeRatios& s) {
  validate(s);
  const double numer =
      2.0 * s.k + 2.0 * s.r * s.k + s.r / std::cos(s.alpha) + std::tan(s.alpha) / 2.0;
  return numer / std::pow(s.r * s.k, 2.0 / 3.0);
}

HouseParams scaled(const HouseParams& p, double factor) {
  validate(p);
  detail::require_positive(factor, "scale");
  return {p.width * factor, p.length * factor, p.height * factor, p.alpha};
}

}  // namespace barn
