#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barnopt/optimize_volume.hpp"

namespace barn {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct Axis {
  std::string name;
  std::string unit;
  std::vector<double> values;  // strictly ascending
};

struct Marker {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Row-major samples: values[i * x.values.size() + j] is the field at
/// (x.values[j], y.values[i]).
struct ScalarField2D {
  Axis x;
  Axis y;
  std::string value_name;
  std::string value_unit;
  std::vector<double> values;
  std::optional<Marker> marker;

  double at(std::size_t row, std::size_t col) const { return values[row * x.values.size() + col]; }
};

struct CurveMarker {
  double x = 0.0;
  double value = 0.0;
};

struct Curve1D {
  Axis x;
  std::string value_name;
  std::string value_unit;
  std::vector<double> values;
  std::optional<CurveMarker> marker;
};

inline constexpr int kMinFieldResolution = 16;
inline constexpr int kMaxFieldResolution = 4096;

/// Defaults shared by the CLI and the HTTP service.
inline constexpr Range kDefaultShapeRange{0.2, 4.0};
inline constexpr int kDefaultFieldResolution = 128;
inline constexpr int kDefaultContourResolution = 256;
inline constexpr int kDefaultCurveSamples = 200;
inline const std::vector<double> kDefaultContourLevels = {1.01, 1.05, 1.1, 1.25, 1.5};

/// Node j of a uniform axis with `resolution` intervals (resolution + 1 nodes).
/// Nodes of resolution n reappear bit-identically at even indices of 2n.
double uniform_node(const Range& range, int resolution, int j);

/// V^(2/3) gamma(r, k) on a (resolution + 1)^2 grid. Marker: closed-form
/// optimum, omitted when it falls outside the window.
ScalarField2D surface_field(double volume, double alpha, const Range& r_range,
                            const Range& k_range, int resolution);

/// Volume-free compactness S / S_min over (r, k). Marker value is 1.
ScalarField2D compactness_field(double alpha, const Range& r_range, const Range& k_range,
                                int resolution);

struct Polyline {
  bool closed = false;
  std::vector<std::pair<double, double>> points;
};

struct LevelContours {
  double level = 0.0;
  std::vector<Polyline> polylines;
};

struct ContourSet {
  double alpha = 0.0;
  std::vector<double> levels;
  std::vector<LevelContours> contours;  // one entry per level, same order
  double max_relative_residual = 0.0;   // over all emitted vertices
};

/// Iso-lines of `field` at `level` by marching squares with linear edge
/// interpolation. Saddle cells are resolved with the cell-centre average.
std::vector<Polyline> marching_squares(const ScalarField2D& field, double level);

/// Level curves of the compactness measure. Levels must be finite and
/// strictly ascending; levels outside the sampled range give no polylines.
ContourSet compactness_contours(double alpha, const std::vector<double>& levels,
                                const Range& r_range, const Range& k_range, int resolution);

/// Fixed-volume optima at `samples` evenly spaced angles on alpha_range.
std::vector<FixedVolumeOptimum> sweep_curves(double volume, const Range& alpha_range,
                                             int samples);

/// S(W) at fixed floor area. Default W window: [0.25, 3] x W_min.
/// Marker: (W_min, S_min) from the cubic solution.
Curve1D floor_curve(double floor, double height, double alpha,
                    const std::optional<Range>& width_range, int samples);

}  // namespace barn
