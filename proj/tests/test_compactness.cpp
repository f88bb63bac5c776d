#include <gtest/gtest.h>

#include <cmath>

#include "barnopt/compactness.hpp"
#include "barnopt/error.hpp"
#include "test_support.hpp"

namespace barn {
namespace {

using testing::deg;
using testing::rel_diff;

TEST(Compactness, HouseA) {
  const CompactnessReport c = compactness({19.9, 15.75, 5.0, deg(35)});
  EXPECT_NEAR(c.ratio, 1.19, 0.005);
  EXPECT_NEAR(c.headroom, 140.18, 0.05);
  EXPECT_NEAR(c.surface_min, 737.58, 0.05);
}

TEST(Compactness, HouseC) {
  const CompactnessReport c = compactness({8.0, 13.5, 5.8, deg(40)});
  EXPECT_NEAR(c.ratio, 1.01, 0.005);
  EXPECT_NEAR(c.headroom, 5.22, 0.05);
}

TEST(Compactness, OptimumScoresOne) {
  for (double d : {0.5, 10.0, 30.0, 45.0, 60.0, 89.5}) {
    const FixedVolumeOptimum o = optimize_fixed_volume(300.0, deg(d));
    EXPECT_NEAR(compactness(o.params()).ratio, 1.0, 1e-9);
    EXPECT_NEAR(compactness_of_shape({o.r_min, o.k_min, deg(d)}), 1.0, 1e-12);
  }
}

TEST(Compactness, AlphaFactorInvertsGammaMin) {
  for (double d = 0.5; d <= 89.5; d += 1.0) {
    const double f = compactness_alpha_factor(deg(d));
    EXPECT_LE(rel_diff(f * min_surface_factor(deg(d)), 1.0), 1e-12);
  }
}

TEST(Compactness, AtLeastOneOnRandomDesigns) {
  testing::Rng rng;
  for (int i = 0; i < 10000; ++i) {
    const HouseParams p{rng.log_uniform(1, 60), rng.log_uniform(1, 60), rng.log_uniform(1, 30),
                        rng.alpha()};
    const CompactnessReport c = compactness(p);
    ASSERT_GE(c.ratio, 1.0 - 1e-12) << p.width << " " << p.length << " " << p.height;
    ASSERT_GE(c.headroom, -1e-9 * c.surface);
  }
}

TEST(Compactness, ScaleFree) {
  testing::Rng rng;
  for (int i = 0; i < 1000; ++i) {
    const HouseParams p{rng.log_uniform(1, 60), rng.log_uniform(1, 60), rng.log_uniform(1, 30),
                        rng.alpha()};
    const ScaleCheck s = compactness_is_scale_free(p, rng.log_uniform(1e-3, 1e3));
    EXPECT_TRUE(s.invariant);
    EXPECT_LE(rel_diff(s.ratio_scaled, s.ratio_original), 1e-9);
  }
}

TEST(Compactness, ShapeAndDesignPathsAgree) {
  testing::Rng rng;
  for (int i = 0; i < 1000; ++i) {
    const HouseParams p{rng.log_uniform(1, 60), rng.log_uniform(1, 60), rng.log_uniform(1, 30),
                        rng.alpha()};
    EXPECT_LE(rel_diff(compactness_of_shape(ratios_from_params(p)), compactness(p).ratio), 1e-10);
  }
}

TEST(Compactness, RejectsBadInput) {
  EXPECT_THROW(compactness({-1.0, 1.0, 1.0, deg(30)}), Error);
  EXPECT_THROW(compactness({1.0, 1.0, 1.0, deg(89.9)}), Error);
  EXPECT_THROW(compactness_is_scale_free({1.0, 1.0, 1.0, deg(30)}, 0.0), Error);
}

}  // namespace
}  // namespace barn
