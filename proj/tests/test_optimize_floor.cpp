#include <gtest/gtest.h>

#include <cmath>

#include "barnopt/error.hpp"
#include "barnopt/optimize_floor.hpp"
#include "barnopt/optimize_volume.hpp"
#include "test_support.hpp"

namespace barn {
namespace {

using testing::deg;
using testing::rel_diff;

TEST(FixedFloor, WorkedExample) {
  const FixedFloorOptimum o = optimize_fixed_floor(100.0, 3.0, deg(30));
  EXPECT_NEAR(o.width, 7.60, 0.005);
  EXPECT_NEAR(o.length, 13.16, 0.005);
  EXPECT_NEAR(o.surface_min, 256.69, 0.05);
  EXPECT_NEAR(o.width, 7.59998477, 1e-7);
  EXPECT_NEAR(o.surface_min, 256.691298, 1e-5);
  EXPECT_TRUE(o.radical_condition);
  EXPECT_EQ(o.method, CubicMethod::kCardano);
  EXPECT_LE(o.cubic_residual, 1e-12);
}

struct TableRow {
  double w, l, h, alpha_deg;
  double w_min, l_min, s_min, s;
};

TEST(FixedFloor, CaseStudyHouses) {
  const TableRow rows[] = {
      {19.9, 15.75, 5.0, 35, 12.84, 24.39, 812.84, 877.76},
      {12.4, 20.5, 4.1, 35, 11.36, 22.37, 632.14, 633.93},
      {8.0, 13.5, 5.8, 40, 8.23, 13.12, 417.09, 417.23},
  };
  for (const TableRow& row : rows) {
    const FixedFloorOptimum o = optimize_fixed_floor(row.w * row.l, row.h, deg(row.alpha_deg));
    EXPECT_NEAR(o.width, row.w_min, 0.05);
    EXPECT_NEAR(o.length, row.l_min, 0.05);
    EXPECT_NEAR(o.surface_min, row.s_min, 0.05);
    EXPECT_TRUE(o.radical_condition);
  }
  const double s_c = surface({8.0, 13.5, 5.8, deg(40)}).total;
  EXPECT_NEAR(s_c / optimize_fixed_floor(108.0, 5.8, deg(40)).surface_min, 1.0003, 5e-4);
  const double s_b = surface({12.4, 20.5, 4.1, deg(35)}).total;
  EXPECT_NEAR(s_b / optimize_fixed_floor(254.2, 4.1, deg(35)).surface_min, 1.0028, 5e-4);
}

TEST(FixedFloor, MinimizerCertificate) {
  testing::Rng rng;
  for (int i = 0; i < 1000; ++i) {
    const double f = rng.log_uniform(10, 5000), h = rng.uniform(1.5, 15), a = rng.alpha();
    const FixedFloorOptimum o = optimize_fixed_floor(f, h, a);
    EXPECT_LE(o.cubic_residual, 1e-10);
    EXPECT_NEAR(o.width * o.length, f, 1e-9 * f);
    // Derivative changes sign across the root and the value is a strict local minimum.
    EXPECT_LT(surface_of_width_derivative(o.width * (1 - 1e-6), f, h, a), 0.0);
    EXPECT_GT(surface_of_width_derivative(o.width * (1 + 1e-6), f, h, a), 0.0);
    EXPECT_LE(o.surface_min, surface_of_width(o.width * 0.99, f, h, a));
    EXPECT_LE(o.surface_min, surface_of_width(o.width * 1.01, f, h, a));
  }
}

TEST(FixedFloor, DerivativeMatchesFiniteDifference) {
  testing::Rng rng;
  for (int i = 0; i < 1000; ++i) {
    const double f = rng.log_uniform(10, 5000), h = rng.uniform(1.5, 15), a = rng.alpha();
    const double w = rng.log_uniform(0.2 * std::sqrt(f), 5 * std::sqrt(f));
    const double analytic = surface_of_width_derivative(w, f, h, a);
    const double fd = testing::central_diff(
        [&](double x) { return surface_of_width(x, f, h, a); }, w, 1e-6 * w);
    const double scale = std::max(std::abs(analytic), 1e-3 * surface_of_width(w, f, h, a) / w);
    EXPECT_LE(std::abs(analytic - fd) / scale, 1e-5);
  }
}

TEST(FixedFloor, AgreesWithFixedVolumeOptimum) {
  testing::Rng rng;
  for (int i = 0; i < 500; ++i) {
    const double alpha = rng.alpha();
    const FixedVolumeOptimum v = optimize_fixed_volume(rng.log_uniform(10, 5000), alpha);
    const FixedFloorOptimum f = optimize_fixed_floor(v.width * v.length, v.height, alpha);
    EXPECT_LE(rel_diff(f.width, v.width), 1e-8);
    EXPECT_LE(rel_diff(f.length, v.length), 1e-8);
    EXPECT_LE(rel_diff(f.surface_min, v.surface_min), 1e-8);
  }
}

TEST(FixedFloor, NeverBeatsFixedVolumeBound) {
  testing::Rng rng;
  for (int i = 0; i < 1000; ++i) {
    const double f = rng.log_uniform(10, 5000), h = rng.uniform(1.5, 15), a = rng.alpha();
    const FixedFloorOptimum o = optimize_fixed_floor(f, h, a);
    EXPECT_GE(o.surface_min, optimize_fixed_volume(f * h, a).surface_min * (1 - 1e-12));
  }
}

TEST(FixedFloor, FlatLimit) {
  EXPECT_NEAR(surface_of_width(10.0, 100.0, 1e-9, 1e-9), 100.0, 1e-6);
}

TEST(FixedFloor, TallWallsUseTrigonometricForm) {
  const FixedFloorOptimum o = optimize_fixed_floor(10.0, 12.0, deg(5));
  EXPECT_FALSE(o.radical_condition);
  EXPECT_EQ(o.method, CubicMethod::kTrigonometric);
  EXPECT_NEAR(surface_of_width_derivative(o.width, 10.0, 12.0, deg(5)), 0.0, 1e-9);
}

TEST(FixedFloor, RejectsBadInput) {
  const auto check = [](double f, double h, double a, ErrorCode code, const char* param) {
    try {
      optimize_fixed_floor(f, h, a);
      ADD_FAILURE() << "no throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
      EXPECT_EQ(e.param(), param);
    }
  };
  check(0.0, 3.0, deg(30), ErrorCode::kInvalidParameter, "floor");
  check(100.0, -3.0, deg(30), ErrorCode::kInvalidParameter, "height");
  check(100.0, 3.0, deg(90), ErrorCode::kOutOfDomain, "alpha");
  check(100.0, 3.0, deg(0.2), ErrorCode::kOutOfDomain, "alpha");
}

}  // namespace
}  // namespace barn
