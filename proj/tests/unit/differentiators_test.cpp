#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "adf/finite_difference.hpp"
#include "adf/linear_filtered_differentiator.hpp"
#include "adf/robust_exact_differentiator.hpp"

namespace adf {
namespace {

constexpr double kTs = 5e-4;

TEST(FiniteDifference, Arithmetic) {
  EXPECT_DOUBLE_EQ(finite_difference(1.0, 0.0, 0.0005), 2000.0);
  EXPECT_EQ(finite_difference(3.3, 3.3, 0.1), 0.0);
  FiniteDifference fd(kTs);
  EXPECT_FALSE(fd.step({0, 1}));
  EXPECT_DOUBLE_EQ(*fd.step({kTs, 2}), 2000.0);
}

TEST(Ldf, Validation) {
  EXPECT_THROW(LinearFilteredDifferentiator({0.0, kTs}), std::invalid_argument);
  EXPECT_THROW(LinearFilteredDifferentiator({5000.0, kTs}), std::invalid_argument);
}

TEST(Ldf, ConstantGivesZero) {
  LinearFilteredDifferentiator ldf({600, kTs});
  for (int i = 0; i < 100; ++i) EXPECT_NEAR(*ldf.step({i * kTs, 4.2}), 0.0, 1e-12);
}

TEST(Ldf, RampSteadyState) {
  LinearFilteredDifferentiator ldf({600, kTs});
  double y = 0.0;
  for (int i = 0; i < 4000; ++i) y = *ldf.step({i * kTs, 1.0 * i * kTs});
  EXPECT_NEAR(y, 1.0, 1e-6);
}

TEST(Ldf, GainAtCornerIsHalf) {
  const double w0 = 600;
  LinearFilteredDifferentiator ldf({w0, kTs});
  EXPECT_NEAR(std::abs(ldf.frequency_response(w0)) / w0, 0.5, 0.01);
  double peak = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double t = i * kTs;
    const double y = *ldf.step({t, std::sin(w0 * t)});
    if (t > 0.5) peak = std::max(peak, std::abs(y));
  }
  EXPECT_NEAR(peak / w0, 0.5, 0.01);
}

TEST(Ldf, Linear) {
  LinearFilteredDifferentiator a({600, kTs}), b({600, kTs}), c({600, kTs});
  for (int i = 0; i < 500; ++i) {
    const double t = i * kTs;
    const double x1 = std::sin(30 * t), x2 = t * t;
    const double ya = *a.step({t, x1}), yb = *b.step({t, x2}), yc = *c.step({t, 2 * x1 - 3 * x2});
    ASSERT_NEAR(yc, 2 * ya - 3 * yb, 1e-9);
  }
}

TEST(Red, Equilibrium) {
  RobustExactDifferentiator red({8, kTs});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(*red.step({i * kTs, 0.0}), 0.0);
  EXPECT_EQ(red.state().z0, 0.0);
  EXPECT_EQ(red.state().z2, 0.0);
}

TEST(Red, ConvergesOnConstantAndRamp) {
  const double kappa = 8;
  const double band = 5 * kappa * kappa * kTs;
  for (double v : {0.0, 0.05, -0.2}) {
    RobustExactDifferentiator red({kappa, kTs});
    for (int i = 0; i < 4000; ++i) {
      const double t = i * kTs;
      const double z1 = *red.step({t, 0.03 + v * t});
      if (t >= 0.5) ASSERT_LE(std::abs(z1 - v), band) << v << " " << t;
      ASSERT_TRUE(std::isfinite(z1));
    }
  }
}

TEST(Red, StepMatchesFreeFunction) {
  RobustExactDifferentiator red({8, kTs});
  RedState z;
  for (int i = 0; i < 50; ++i) {
    const double x = std::sin(i * 0.1);
    z = red_step(z, x, {8, kTs});
    EXPECT_EQ(*red.step({i * kTs, x}), z.z1);
  }
}

}  // namespace
}  // namespace adf
