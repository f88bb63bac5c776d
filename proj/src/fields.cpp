#include "barnopt/fields.hpp"

#include <array>
#include <cmath>
#include <string>

#include "barnopt/angles.hpp"
#include "barnopt/compactness.hpp"
#include "barnopt/error.hpp"
#include "barnopt/optimize_floor.hpp"

namespace barn {

namespace {

constexpr int kMaxCurveSamples = 100000;

void validate_range(const Range& range, const char* lo_name, const char* hi_name) {
  detail::require_positive(range.lo, lo_name);
  detail::require_positive(range.hi, hi_name);
  if (range.hi <= range.lo) {
    throw Error(ErrorCode::kInvalidParameter, hi_name,
                std::string(hi_name) + " must exceed " + lo_name);
  }
}

void validate_resolution(int resolution) {
  if (resolution < kMinFieldResolution || resolution > kMaxFieldResolution) {
    throw Error(ErrorCode::kInvalidParameter, "resolution",
                "resolution must lie in [16, 4096]");
  }
}

void validate_samples(int samples) {
  if (samples < 2 || samples > kMaxCurveSamples) {
    throw Error(ErrorCode::kInvalidParameter, "samples", "samples must lie in [2, 100000]");
  }
}

Axis uniform_axis(std::string name, std::string unit, const Range& range, int resolution) {
  Axis axis{std::move(name), std::move(unit), {}};
  axis.values.reserve(static_cast<std::size_t>(resolution) + 1);
  for (int j = 0; j <= resolution; ++j) axis.values.push_back(uniform_node(range, resolution, j));
  return axis;
}

bool inside(const Range& range, double v) { return v >= range.lo && v <= range.hi; }

template <typename Fn>
ScalarField2D shape_field(const Range& r_range, const Range& k_range, int resolution, Fn&& fn) {
  validate_range(r_range, "rmin", "rmax");
  validate_range(k_range, "kmin", "kmax");
  validate_resolution(resolution);
  ScalarField2D field;
  field.x = uniform_axis("r", "1", r_range, resolution);
  field.y = uniform_axis("k", "1", k_range, resolution);
  field.values.reserve(field.x.values.size() * field.y.values.size());
  for (double k : field.y.values) {
    for (double r : field.x.values) field.values.push_back(fn(r, k));
  }
  return field;
}

}  // namespace

double uniform_node(const Range& range, int resolution, int j) {
  if (j <= 0) return range.lo;
  if (j >= resolution) return range.hi;
  return range.lo + (range.hi - range.lo) * (static_cast<double>(j) / resolution);
}

ScalarField2D surface_field(double volume, double alpha, const Range& r_range,
                            const Range& k_range, int resolution) {
  detail::require_positive(volume, "volume");
  require_solver_alpha(alpha);
  const double scale = std::pow(volume, 2.0 / 3.0);
  ScalarField2D field = shape_field(r_range, k_range, resolution, [&](double r, double k) {
    return scale * gamma({r, k, alpha});
  });
  field.value_name = "S";
  field.value_unit = "m^2";

  const FixedVolumeOptimum opt = optimize_fixed_volume(volume, alpha);
  if (inside(r_range, opt.r_min) && inside(k_range, opt.k_min)) {
    field.marker = Marker{opt.r_min, opt.k_min, opt.surface_min};
  }
  return field;
}

ScalarField2D compactness_field(double alpha, const Range& r_range, const Range& k_range,
                                int resolution) {
  require_solver_alpha(alpha);
  ScalarField2D field = shape_field(r_range, k_range, resolution, [&](double r, double k) {
    return compactness_of_shape({r, k, alpha});
  });
  field.value_name = "S/S_min";
  field.value_unit = "1";

  const OptimalRatios opt = optimal_ratios(alpha);
  if (inside(r_range, opt.r) && inside(k_range, opt.k)) {
    field.marker = Marker{opt.r, opt.k, compactness_of_shape({opt.r, opt.k, alpha})};
  }
  return field;
}

std::vector<Polyline> marching_squares(const ScalarField2D& field, double level) {
  const std::size_t nx = field.x.values.size();
  const std::size_t ny = field.y.values.size();
  if (nx < 2 || ny < 2 || field.values.size() != nx * ny) {
    throw Error(ErrorCode::kInvalidParameter, "field", "field must be at least 2x2");
  }

  // Edge ids: 2 * node for the edge to the right neighbour, 2 * node + 1 for
  // the edge to the upper neighbour.
  const auto node = [nx](std::size_t i, std::size_t j) { return i * nx + j; };
  const auto h_edge = [&](std::size_t i, std::size_t j) { return 2 * node(i, j); };
  const auto v_edge = [&](std::size_t i, std::size_t j) { return 2 * node(i, j) + 1; };

  const auto edge_point = [&](std::size_t edge) -> std::pair<double, double> {
    const std::size_t n = edge / 2;
    const std::size_t i = n / nx;
    const std::size_t j = n % nx;
    const bool horizontal = edge % 2 == 0;
    const std::size_t i2 = horizontal ? i : i + 1;
    const std::size_t j2 = horizontal ? j + 1 : j;
    const double va = field.values[node(i, j)];
    const double vb = field.values[node(i2, j2)];
    const double t = (level - va) / (vb - va);
    const double x = field.x.values[j] + t * (field.x.values[j2] - field.x.values[j]);
    const double y = field.y.values[i] + t * (field.y.values[i2] - field.y.values[i]);
    return {x, y};
  };

  std::vector<std::array<std::size_t, 2>> segments;
  for (std::size_t i = 0; i + 1 < ny; ++i) {
    for (std::size_t j = 0; j + 1 < nx; ++j) {
      // Corners counter-clockwise from bottom-left; edges bottom, right, top, left.
      const std::array<double, 4> v = {field.values[node(i, j)], field.values[node(i, j + 1)],
                                       field.values[node(i + 1, j + 1)],
                                       field.values[node(i + 1, j)]};
      const std::array<bool, 4> above = {v[0] > level, v[1] > level, v[2] > level, v[3] > level};
      const std::array<std::size_t, 4> edges = {h_edge(i, j), v_edge(i, j + 1), h_edge(i + 1, j),
                                                v_edge(i, j)};
      // Edge e joins corners e and (e + 1) % 4.
      std::array<std::size_t, 4> crossed{};
      int count = 0;
      for (int e = 0; e < 4; ++e) {
        if (above[e] != above[(e + 1) % 4]) crossed[count++] = static_cast<std::size_t>(e);
      }
      if (count == 2) {
        segments.push_back({edges[crossed[0]], edges[crossed[1]]});
      } else if (count == 4) {
        const bool centre_above = (v[0] + v[1] + v[2] + v[3]) / 4.0 > level;
        if (centre_above == above[0]) {
          // Corners 0 and 2 connected through the centre: cut off 1 and 3.
          segments.push_back({edges[0], edges[1]});
          segments.push_back({edges[2], edges[3]});
        } else {
          segments.push_back({edges[3], edges[0]});
          segments.push_back({edges[1], edges[2]});
        }
      }
    }
  }

  // Link segments sharing an edge crossing into polylines.
  std::vector<std::array<long, 2>> incident(2 * nx * ny, {-1, -1});
  for (std::size_t s = 0; s < segments.size(); ++s) {
    for (std::size_t e : segments[s]) {
      auto& slot = incident[e];
      (slot[0] < 0 ? slot[0] : slot[1]) = static_cast<long>(s);
    }
  }
  const auto other_segment = [&](std::size_t edge, std::size_t seg) -> long {
    const auto& slot = incident[edge];
    return slot[0] == static_cast<long>(seg) ? slot[1] : slot[0];
  };

  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> out;
  const auto trace = [&](std::size_t start_seg, std::size_t start_edge) {
    Polyline line;
    std::size_t seg = start_seg;
    std::size_t edge = start_edge;
    line.points.push_back(edge_point(edge));
    while (true) {
      used[seg] = true;
      const std::size_t next_edge = segments[seg][0] == edge ? segments[seg][1] : segments[seg][0];
      line.points.push_back(edge_point(next_edge));
      const long next = other_segment(next_edge, seg);
      if (next < 0) break;
      if (used[static_cast<std::size_t>(next)]) {
        line.closed = next_edge == start_edge;
        break;
      }
      seg = static_cast<std::size_t>(next);
      edge = next_edge;
    }
    if (line.closed) line.points.pop_back();
    out.push_back(std::move(line));
  };

  // Open chains start at crossings owned by a single segment (field boundary).
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) continue;
    for (std::size_t e : segments[s]) {
      if (!used[s] && other_segment(e, s) < 0) trace(s, e);
    }
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) trace(s, segments[s][0]);
  }
  return out;
}

ContourSet compactness_contours(double alpha, const std::vector<double>& levels,
                                const Range& r_range, const Range& k_range, int resolution) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!std::isfinite(levels[i]) || (i > 0 && levels[i] <= levels[i - 1])) {
      throw Error(ErrorCode::kInvalidParameter, "levels",
                  "levels must be finite and strictly ascending");
    }
  }
  const ScalarField2D field = compactness_field(alpha, r_range, k_range, resolution);

  ContourSet set;
  set.alpha = alpha;
  set.levels = levels;
  for (double level : levels) {
    LevelContours lc{level, marching_squares(field, level)};
    for (const Polyline& line : lc.polylines) {
      for (const auto& [r, k] : line.points) {
        const double value = compactness_of_shape({r, k, alpha});
        set.max_relative_residual =
            std::max(set.max_relative_residual, std::abs(value - level) / level);
      }
    }
    set.contours.push_back(std::move(lc));
  }
  return set;
}

std::vector<FixedVolumeOptimum> sweep_curves(double volume, const Range& alpha_range,
                                             int samples) {
  detail::require_positive(volume, "volume");
  validate_samples(samples);
  require_solver_alpha(alpha_range.lo);
  require_solver_alpha(alpha_range.hi);
  if (alpha_range.hi <= alpha_range.lo) {
    throw Error(ErrorCode::kInvalidParameter, "alpha_max", "alpha range upper bound must exceed lower bound");
  }
  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) alphas.push_back(uniform_node(alpha_range, samples - 1, i));
  return alpha_sweep(volume, alphas);
}

Curve1D floor_curve(double floor, double height, double alpha,
                    const std::optional<Range>& width_range, int samples) {
  validate_samples(samples);
  const FixedFloorOptimum opt = optimize_fixed_floor(floor, height, alpha);
  const Range range = width_range.value_or(Range{0.25 * opt.width, 3.0 * opt.width});
  validate_range(range, "wmin", "wmax");

  Curve1D curve;
  curve.x = uniform_axis("W", "m", range, samples - 1);
  curve.value_name = "S";
  curve.value_unit = "m^2";
  curve.values.reserve(curve.x.values.size());
  for (double w : curve.x.values) curve.values.push_back(surface_of_width(w, floor, height, alpha));
  if (inside(range, opt.width)) {
    curve.marker = CurveMarker{opt.width, opt.surface_min};
  }
  return curve;
}

}  // namespace barn
