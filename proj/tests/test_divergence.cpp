#include <gtest/gtest.h>

#include <cmath>

#include "solitonlab/error.hpp"
#include "solitonlab/numerics/divergence.hpp"

namespace sl = solitonlab;
using namespace sl::numerics;

TEST(Divergence, HarmonicTailDiverges) {
  const auto t = divergence_probe([](double x) { return 1.0 / (1.0 + x); }, 0.0);
  EXPECT_EQ(t.verdict, DivergenceVerdict::divergent);
  ASSERT_FALSE(t.partial_sums.empty());
  EXPECT_NEAR(t.partial_sums.back(), std::log1p(t.checkpoints.back()), 1e-8);
}

TEST(Divergence, ShiftedStartPoint) {
  const auto t = divergence_probe([](double x) { return 1.0 / (2.0 + 3.0 * x); }, 5.0);
  EXPECT_EQ(t.verdict, DivergenceVerdict::divergent);
}

TEST(Divergence, SquareTailConverges) {
  const auto t = divergence_probe([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); }, 0.0);
  EXPECT_EQ(t.verdict, DivergenceVerdict::convergent);
  EXPECT_NEAR(t.partial_sums.back(), 1.0, 1e-6);
}

TEST(Divergence, CubicTailConverges) {
  const auto t = divergence_probe([](double x) { return 1.0 / std::pow(1.0 + x, 3); }, 0.0);
  EXPECT_EQ(t.verdict, DivergenceVerdict::convergent);
  EXPECT_NEAR(t.partial_sums.back(), 0.5, 1e-8);
}

TEST(Divergence, LogarithmicallySlowTailIsNotCalledConvergent) {
  // int dx / ((1+x) ln^2(e+x)) converges only like 1/ln T.
  const auto t = divergence_probe([](double x) { return 1.0 / ((1.0 + x) * std::pow(std::log(M_E + x), 2)); }, 0.0);
  EXPECT_NE(t.verdict, DivergenceVerdict::convergent);
}

TEST(Divergence, Preconditions) {
  EXPECT_THROW(divergence_probe([](double) { return -1.0; }, 0.0), sl::PreconditionError);
  DivergenceProbeOptions o;
  o.decades = 3;
  EXPECT_THROW(divergence_probe([](double) { return 1.0; }, 0.0, o), sl::PreconditionError);
}
