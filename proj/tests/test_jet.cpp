#include <gtest/gtest.h>

#include <cmath>

#include "solitonlab/error.hpp"
#include "solitonlab/numerics/jet.hpp"
#include "solitonlab/numerics/random.hpp"

namespace sl = solitonlab;
using sl::numerics::Jet;

namespace {

double factorial(int k) { return k <= 1 ? 1.0 : k * factorial(k - 1); }

// A jet with random coefficients around a random base point.
Jet random_jet(sl::numerics::Rng& rng, int nvars, int order, double base) {
  Jet j(nvars, order, base);
  for (std::size_t k = 1; k < j.size(); ++k) j.set_coefficient(j.exponents(k), rng.uniform(-0.5, 0.5));
  return j;
}

void expect_jets_near(const Jet& a, const Jet& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a.coefficients()[k], b.coefficients()[k], tol) << "k=" << k;
}

}  // namespace

TEST(Jet, ExpCoefficientsAreTaylorSeries) {
  const Jet x = Jet::variable(1, 8, 0, 0.3);
  const Jet e = sl::numerics::exp(x);
  for (int k = 0; k <= 8; ++k) EXPECT_NEAR(e.coefficient({k, 0, 0}), std::exp(0.3) / factorial(k), 1e-15);
}

TEST(Jet, MixedPartialOfPolynomial) {
  // f = x^2 y^3 at (1.5, -0.5).
  const Jet x = Jet::variable(2, 6, 0, 1.5);
  const Jet y = Jet::variable(2, 6, 1, -0.5);
  const Jet f = x * x * y * y * y;
  EXPECT_NEAR(f.derivative({1, 0, 0}), 2 * 1.5 * -0.125, 1e-14);
  EXPECT_NEAR(f.derivative({2, 1, 0}), 2 * 3 * 0.25, 1e-14);
  EXPECT_NEAR(f.derivative({2, 3, 0}), 12.0, 1e-13);
  EXPECT_NEAR(f.derivative({3, 0, 0}), 0.0, 1e-14);
  const Jet fx = f.partial(0);
  EXPECT_EQ(fx.order(), 5);
  EXPECT_NEAR(fx.derivative({1, 1, 0}), 2 * 3 * 0.25, 1e-13);
}

TEST(Jet, ElementaryIdentitiesOnRandomJets) {
  sl::numerics::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int nv = 1 + trial % 3;
    const Jet a = random_jet(rng, nv, 5, rng.uniform(0.2, 2.0));
    expect_jets_near(sl::numerics::log(sl::numerics::exp(a)), a, 1e-12);
    expect_jets_near(sl::numerics::square(sl::numerics::sqrt(a)), a, 1e-12);
    expect_jets_near(a * sl::numerics::reciprocal(a), Jet(nv, 5, 1.0), 1e-12);
    expect_jets_near(sl::numerics::square(sl::numerics::sin(a)) + sl::numerics::square(sl::numerics::cos(a)),
                     Jet(nv, 5, 1.0), 1e-12);
    expect_jets_near(sl::numerics::square(sl::numerics::cosh(a)) - sl::numerics::square(sl::numerics::sinh(a)),
                     Jet(nv, 5, 1.0), 1e-11);
    expect_jets_near(sl::numerics::tanh(a), sl::numerics::sinh(a) / sl::numerics::cosh(a), 1e-12);
    expect_jets_near(sl::numerics::pow(a, 0.5), sl::numerics::sqrt(a), 1e-12);
    expect_jets_near(sl::numerics::pow(a, 3.0), a * a * a, 1e-12);
  }
}

TEST(Jet, ComposeMatchesGeometricSeries) {
  // 1 / (1 - t) at t0 = 0.2 has Taylor coefficients 1 / 0.8^{k+1}.
  std::vector<double> taylor;
  for (int k = 0; k <= 6; ++k) taylor.push_back(std::pow(0.8, -(k + 1)));
  const Jet t = Jet::variable(1, 6, 0, 0.2);
  expect_jets_near(sl::numerics::compose(taylor, t), sl::numerics::reciprocal(1.0 - t), 1e-12);
}

TEST(Jet, AntiderivativeInvertsPartial) {
  sl::numerics::Rng rng(3);
  const Jet a = random_jet(rng, 1, 5, 0.7);
  const Jet back = a.antiderivative().partial(0);
  expect_jets_near(back, a, 1e-15);
  EXPECT_EQ(a.antiderivative().value(), 0.0);
}

// Second-order finite differences as an independent oracle.
TEST(Jet, DerivativesMatchFiniteDifferences) {
  auto f = [](double x, double y) { return std::exp(std::sin(x) * y) / (1.0 + x * x); };
  auto fj = [](const Jet& x, const Jet& y) {
    return sl::numerics::exp(sl::numerics::sin(x) * y) / (1.0 + x * x);
  };
  const double x0 = 0.4, y0 = -0.8, h = 1e-4;
  const Jet F = fj(Jet::variable(2, 2, 0, x0), Jet::variable(2, 2, 1, y0));
  EXPECT_NEAR(F.derivative({1, 0, 0}), (f(x0 + h, y0) - f(x0 - h, y0)) / (2 * h), 1e-7);
  EXPECT_NEAR(F.derivative({0, 1, 0}), (f(x0, y0 + h) - f(x0, y0 - h)) / (2 * h), 1e-7);
  EXPECT_NEAR(F.derivative({2, 0, 0}), (f(x0 + h, y0) - 2 * f(x0, y0) + f(x0 - h, y0)) / (h * h), 1e-5);
  const double fxy =
      (f(x0 + h, y0 + h) - f(x0 + h, y0 - h) - f(x0 - h, y0 + h) + f(x0 - h, y0 - h)) / (4 * h * h);
  EXPECT_NEAR(F.derivative({1, 1, 0}), fxy, 1e-5);
}

TEST(Jet, TruncationAndMixedOrders) {
  const Jet a = Jet::variable(2, 4, 0, 1.0);
  const Jet b = Jet::variable(2, 2, 1, 2.0);
  const Jet c = a * b;
  EXPECT_EQ(c.order(), 2);
  EXPECT_EQ(a.truncated(1).order(), 1);
  EXPECT_NEAR(c.derivative({1, 1, 0}), 1.0, 1e-15);
}

TEST(Jet, RejectsInvalidUse) {
  EXPECT_THROW(Jet(4, 2), sl::PreconditionError);
  EXPECT_THROW(Jet(1, 9), sl::PreconditionError);
  EXPECT_THROW(Jet::variable(1, 2, 0, 0.0) + Jet::variable(2, 2, 0, 0.0), sl::PreconditionError);
  EXPECT_THROW(Jet(1, 0, 1.0).partial(0), sl::PreconditionError);
  EXPECT_THROW(sl::numerics::log(Jet(1, 2, -1.0)), sl::DomainError);
  EXPECT_THROW(sl::numerics::reciprocal(Jet(1, 2, 0.0)), sl::DomainError);
}
