#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "barnopt/error.hpp"
#include "barnopt/fields.hpp"
#include "barnopt/compactness.hpp"
#include "test_support.hpp"

namespace barn {
namespace {

using testing::deg;

bool inside(const Polyline& poly, double x, double y) {
  bool in = false;
  const auto& p = poly.points;
  for (std::size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) {
    if ((p[i].second > y) != (p[j].second > y) &&
        x < (p[j].first - p[i].first) * (y - p[i].second) / (p[j].second - p[i].second) +
                p[i].first)
      in = !in;
  }
  return in;
}

TEST(UniformNode, Endpoints) {
  EXPECT_EQ(uniform_node({0.2, 4.0}, 128, 0), 0.2);
  EXPECT_EQ(uniform_node({0.2, 4.0}, 128, 128), 4.0);
}

TEST(SurfaceField, MarkerAtWorkedExample) {
  const ScalarField2D f = surface_field(300.0, deg(30), kDefaultShapeRange, kDefaultShapeRange, 128);
  ASSERT_TRUE(f.marker.has_value());
  EXPECT_NEAR(f.marker->value, 238.7161, 5e-4);
  EXPECT_NEAR(f.marker->x, 1.3660, 5e-4);
  EXPECT_NEAR(f.marker->y, 0.7887, 5e-4);
  EXPECT_EQ(f.values.size(), 129u * 129u);
  for (double v : f.values) EXPECT_GE(v, f.marker->value);
}

TEST(SurfaceField, MarkerOmittedOutsideWindow) {
  const ScalarField2D f = surface_field(300.0, deg(30), {2.0, 4.0}, {2.0, 4.0}, 16);
  EXPECT_FALSE(f.marker.has_value());
}

TEST(SurfaceField, RefinementKeepsSharedNodes) {
  const ScalarField2D a = surface_field(300.0, deg(30), kDefaultShapeRange, kDefaultShapeRange, 64);
  const ScalarField2D b = surface_field(300.0, deg(30), kDefaultShapeRange, kDefaultShapeRange, 128);
  for (std::size_t i = 0; i < a.y.values.size(); ++i)
    for (std::size_t j = 0; j < a.x.values.size(); ++j) {
      ASSERT_EQ(a.x.values[j], b.x.values[2 * j]);
      ASSERT_EQ(a.at(i, j), b.at(2 * i, 2 * j));
    }
}

TEST(CompactnessField, AtLeastOne) {
  const ScalarField2D f = compactness_field(deg(30), kDefaultShapeRange, kDefaultShapeRange, 128);
  ASSERT_TRUE(f.marker.has_value());
  EXPECT_NEAR(f.marker->value, 1.0, 1e-12);
  for (double v : f.values) EXPECT_GE(v, 1.0 - 1e-9);
  for (std::size_t i = 1; i < f.x.values.size(); ++i) EXPECT_GT(f.x.values[i], f.x.values[i - 1]);
}

TEST(Fields, RejectBadInput) {
  const auto param_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.param();
    }
    return std::string("none");
  };
  EXPECT_EQ(param_of([] { compactness_field(deg(30), {4.0, 0.2}, kDefaultShapeRange, 64); }),
            "rmax");
  EXPECT_EQ(param_of([] { compactness_field(deg(30), kDefaultShapeRange, {-1.0, 2.0}, 64); }),
            "kmin");
  EXPECT_EQ(param_of([] { compactness_field(deg(30), kDefaultShapeRange, kDefaultShapeRange, 8); }),
            "resolution");
  EXPECT_EQ(
      param_of([] { compactness_field(deg(30), kDefaultShapeRange, kDefaultShapeRange, 4097); }),
      "resolution");
  EXPECT_EQ(param_of([] { surface_field(-3.0, deg(30), kDefaultShapeRange, kDefaultShapeRange, 64); }),
            "volume");
  EXPECT_EQ(param_of([] {
              compactness_contours(deg(30), {1.2, 1.1}, kDefaultShapeRange, kDefaultShapeRange, 64);
            }),
            "levels");
}

TEST(Contours, LevelOneIsEmpty) {
  const ContourSet c =
      compactness_contours(deg(45), {0.99, 1.0}, kDefaultShapeRange, kDefaultShapeRange, 128);
  ASSERT_EQ(c.contours.size(), 2u);
  EXPECT_TRUE(c.contours[0].polylines.empty());
  EXPECT_TRUE(c.contours[1].polylines.empty());
}

TEST(Contours, ClosedAndNested) {
  // The 1.2 level reaches r ~ 6.3 and k ~ 4.4 at 45 degrees.
  const ContourSet c = compactness_contours(deg(45), {1.05, 1.1, 1.2}, {0.2, 8.0}, {0.1, 6.0},
                                            kDefaultContourResolution);
  ASSERT_EQ(c.contours.size(), 3u);
  ASSERT_EQ(c.contours[1].polylines.size(), 1u);
  EXPECT_TRUE(c.contours[1].polylines[0].closed);
  EXPECT_LE(c.max_relative_residual, 0.005);

  ASSERT_EQ(c.contours[2].polylines.size(), 1u);
  const Polyline& outer = c.contours[2].polylines[0];
  ASSERT_TRUE(outer.closed);
  for (const Polyline& inner : c.contours[0].polylines)
    for (const auto& [x, y] : inner.points) EXPECT_TRUE(inside(outer, x, y));

  // The optimum is enclosed by every level.
  const OptimalRatios o = optimal_ratios(deg(45));
  EXPECT_TRUE(inside(c.contours[1].polylines[0], 1.4783, 1.0453));
  for (const LevelContours& lc : c.contours) EXPECT_TRUE(inside(lc.polylines.at(0), o.r, o.k));
}

TEST(Contours, DefaultWindow) {
  // Only levels that fit inside [0.2, 4]^2 come back closed.
  const ContourSet c = compactness_contours(deg(45), {1.05, 1.1}, kDefaultShapeRange,
                                            kDefaultShapeRange, kDefaultContourResolution);
  ASSERT_EQ(c.contours[0].polylines.size(), 1u);
  EXPECT_TRUE(c.contours[0].polylines[0].closed);
  for (const Polyline& p : c.contours[1].polylines) EXPECT_FALSE(p.closed);
  EXPECT_LE(c.max_relative_residual, 0.005);
}

TEST(Contours, VerticesLieOnLevel) {
  const ContourSet c = compactness_contours(deg(40), kDefaultContourLevels, kDefaultShapeRange,
                                            kDefaultShapeRange, kDefaultContourResolution);
  EXPECT_LE(c.max_relative_residual, 0.005);
  for (const LevelContours& lc : c.contours)
    for (const Polyline& p : lc.polylines)
      for (const auto& [x, y] : p.points)
        EXPECT_LE(std::abs(compactness_of_shape({x, y, deg(40)}) - lc.level) / lc.level, 0.005);
}

TEST(MarchingSquares, SaddleCell) {
  ScalarField2D f;
  f.x.values = {0.0, 1.0};
  f.y.values = {0.0, 1.0};
  f.values = {1.0, 0.0, 0.0, 1.0};
  const auto lines = marching_squares(f, 0.5);
  std::size_t points = 0;
  for (const Polyline& p : lines) points += p.points.size();
  EXPECT_EQ(lines.size(), 2u);
  EXPECT_EQ(points, 4u);
}

TEST(Sweep, ThirtyDegreeSample) {
  const auto s = sweep_curves(300.0, {deg(0.5), deg(89.5)}, 200);
  ASSERT_EQ(s.size(), 200u);
  EXPECT_NEAR(s.front().alpha, deg(0.5), 1e-15);
  EXPECT_NEAR(s.back().alpha, deg(89.5), 1e-15);
  const auto one = sweep_curves(300.0, {deg(30), deg(31)}, 2);
  EXPECT_NEAR(one.front().width, 6.5301, 5e-4);
}

TEST(FloorCurve, MarkerAndShape) {
  const Curve1D c = floor_curve(100.0, 3.0, deg(30), std::nullopt, kDefaultCurveSamples);
  ASSERT_TRUE(c.marker.has_value());
  EXPECT_NEAR(c.marker->x, 7.60, 0.005);
  EXPECT_NEAR(c.marker->value, 256.69, 0.05);
  ASSERT_EQ(c.values.size(), 200u);
  for (double v : c.values) EXPECT_GE(v, c.marker->value);
  EXPECT_THROW(floor_curve(100.0, 3.0, deg(30), Range{5.0, 2.0}, 200), Error);
  EXPECT_THROW(floor_curve(100.0, 3.0, deg(30), std::nullopt, 1), Error);
}

}  // namespace
}  // namespace barn
