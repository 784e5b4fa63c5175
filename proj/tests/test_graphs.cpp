#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "solitonlab/error.hpp"
#include "solitonlab/graphs/checks.hpp"
#include "solitonlab/graphs/graph.hpp"
#include "solitonlab/graphs/lemma_x.hpp"
#include "solitonlab/numerics/random.hpp"
#include "solitonlab/zoo/grim_reaper.hpp"

namespace sl = solitonlab;
using namespace sl::graphs;
namespace nm = sl::numerics;

namespace {

double test_height(double x, double y) { return 0.3 * x * x + 0.2 * x * y + 0.1 * std::sin(y); }

GraphHypersurface generic_graph(int eps) {
  const ScalarField u([](std::span<const Jet> v) { return 0.3 * v[0] * v[0] + 0.2 * v[0] * v[1] + 0.1 * nm::sin(v[1]); });
  return GraphHypersurface(ProductSpace(ChartMetric::euclidean(2), eps), u);
}

// div(grad u / W) by central differences of the analytic gradient.
double mean_curvature_fd(int eps, double x, double y) {
  auto flux = [eps](double a, double b) {
    const double ux = 0.6 * a + 0.2 * b;
    const double uy = 0.2 * a + 0.1 * std::cos(b);
    const double W = std::sqrt(1.0 + eps * (ux * ux + uy * uy));
    return std::pair{ux / W, uy / W};
  };
  const double h = 1e-5;
  return (flux(x + h, y).first - flux(x - h, y).first) / (2 * h) +
         (flux(x, y + h).second - flux(x, y - h).second) / (2 * h);
}

}  // namespace

TEST(Graphs, LorentzianGrimReaper) {
  const auto g = sl::zoo::grim_reaper(-1);
  for (double x1 : {-2.0, -0.3, 0.0, 1.0, 3.5}) {
    const std::vector<double> x{x1, 0.7};
    const auto p = g.at(x);
    const double sech = 1.0 / std::cosh(x1);
    EXPECT_NEAR(p.induced_metric()(0, 0), sech * sech, 1e-14);
    EXPECT_NEAR(p.induced_metric()(1, 1), 1.0, 1e-14);
    EXPECT_NEAR(p.W.value(), sech, 1e-14);
    EXPECT_NEAR(p.nu_R.value(), std::cosh(x1), 1e-12 * std::cosh(x1));
    EXPECT_NEAR(p.normal_M()(0), std::sinh(x1), 1e-12 * std::cosh(x1));
    EXPECT_NEAR(mean_curvature(g, x), std::cosh(x1), 1e-11 * std::cosh(x1));
    EXPECT_NEAR(mean_curvature_soliton(g, x), mean_curvature(g, x), 1e-11 * std::cosh(x1));
    EXPECT_NEAR(soliton_residual(g, x), 0.0, 1e-10 * std::cosh(x1));
  }
}

TEST(Graphs, RiemannianGrimReaper) {
  const auto g = sl::zoo::grim_reaper(+1);
  for (double x1 : {-1.2, 0.0, 0.5, 1.5}) {
    const std::vector<double> x{x1, -0.4};
    EXPECT_NEAR(mean_curvature(g, x), std::cos(x1), 1e-13);
    EXPECT_NEAR(mean_curvature_soliton(g, x), std::cos(x1), 1e-13);
    EXPECT_NEAR(soliton_residual(g, x), 0.0, 1e-12);
  }
  EXPECT_THROW(g.at(std::vector<double>{2.0, 0.0}), sl::DomainError);
}

TEST(Graphs, ScaledSpeedGrimReaper) {
  const double c = 2.5;
  const auto g = sl::zoo::grim_reaper(-1, c, 3);
  const std::vector<double> x{0.4, 0.1, -0.2};
  EXPECT_NEAR(mean_curvature(g, x), c * std::cosh(c * 0.4), 1e-11);
  EXPECT_NEAR(soliton_residual(g, x), 0.0, 1e-10);
}

TEST(Graphs, FlatGraphIsTotallyGeodesic) {
  const GraphHypersurface g(ProductSpace(ChartMetric::euclidean(2), -1), ScalarField::constant(0.0));
  const std::vector<double> x{0.3, 0.9};
  const auto nu = unit_normal(g, x);
  EXPECT_EQ(nu.nu_M.norm(), 0.0);
  EXPECT_EQ(nu.nu_R, 1.0);
  EXPECT_EQ(mean_curvature(g, x), 0.0);
  EXPECT_EQ(shape_operator(g, x).norm(), 0.0);
}

TEST(Graphs, MeanCurvatureMatchesFiniteDifferences) {
  for (int eps : {-1, 1}) {
    const auto g = generic_graph(eps);
    for (auto [x, y] : {std::pair{0.1, 0.2}, std::pair{-0.5, 0.8}, std::pair{0.7, -1.0}}) {
      const std::vector<double> p{x, y};
      EXPECT_NEAR(mean_curvature(g, p), mean_curvature_fd(eps, x, y), 1e-8) << eps << " " << x << " " << y;
    }
  }
  EXPECT_NEAR(generic_graph(-1).at(std::vector<double>{0.2, 0.3}).u.value(), test_height(0.2, 0.3), 1e-15);
}

TEST(Graphs, ShapeOperatorIsSelfAdjoint) {
  nm::Rng rng(4);
  for (int eps : {-1, 1}) {
    const auto g = generic_graph(eps);
    for (int k = 0; k < 20; ++k) {
      const std::vector<double> x{rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
      const auto p = g.at(x);
      const Eigen::VectorXd X = sample_unit_vector(p.induced_metric(), rng);
      const Eigen::VectorXd Y = sample_unit_vector(p.induced_metric(), rng);
      EXPECT_NEAR(self_adjointness_defect(p, X, Y), 0.0, 1e-13);
      EXPECT_NEAR(X.dot(p.induced_metric() * X), 1.0, 1e-13);
    }
  }
}

TEST(Graphs, RejectsNonSpacelikeAndUnclaimedSolitons) {
  const GraphHypersurface steep(ProductSpace(ChartMetric::euclidean(1), -1),
                                ScalarField([](std::span<const Jet> v) { return 2.0 * v[0]; }));
  EXPECT_THROW(steep.at(std::vector<double>{0.0}), sl::DomainError);
  const auto g = generic_graph(-1);
  const std::vector<double> x{0.1, 0.1};
  EXPECT_THROW(height_gradient_check(g, x), sl::PreconditionError);
  EXPECT_THROW(drift_laplacian_H_check(g, x), sl::PreconditionError);
  EXPECT_THROW(qiu_chen_inequality_check(g, x), sl::PreconditionError);
  EXPECT_THROW(ProductSpace(ChartMetric::euclidean(2), 0), sl::PreconditionError);
}

TEST(Graphs, SolitonIdentitiesOnGrimReaper) {
  const auto g = sl::zoo::grim_reaper(-1, 1.0, 2);
  nm::Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const std::vector<double> x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const auto p = g.at(x);
    const Eigen::VectorXd X = sample_unit_vector(p.induced_metric(), rng);
    EXPECT_LT(height_gradient_check(g, x).relative(), 1e-11);
    EXPECT_LT(hessian_height_check(g, x, X).relative(), 1e-11);
    EXPECT_LT(drift_laplacian_H_check(g, x).relative(), 1e-10);
    EXPECT_LT(gauss_equation_ricci_check(g, x, X).relative(), 1e-10);
    const auto nr = nu_E_relation_check(g, x);
    EXPECT_NEAR(nr.residual, 0.0, 1e-10 * nr.nu_E_sq);
    EXPECT_TRUE(nr.bounds_hold);
    EXPECT_GE(qiu_chen_inequality_check(g, x).slack, -1e-10);
  }
}

TEST(Graphs, GaussEquationOnRiemannianGraph) {
  // The Ricci comparison does not need the soliton equation.
  const auto g = generic_graph(+1);
  nm::Rng rng(12);
  for (int k = 0; k < 10; ++k) {
    const std::vector<double> x{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Eigen::VectorXd X = sample_unit_vector(g.at(x).induced_metric(), rng);
    EXPECT_LT(gauss_equation_ricci_check(g, x, X).relative(), 1e-10);
  }
}

TEST(LemmaX, HoldsOnRandomPairs) {
  nm::Rng rng(21);
  for (int n : {1, 2, 3}) {
    for (int k = 0; k < 500; ++k) {
      const auto pr = sample_lemma_x_pair(n, rng, 0.1 + 3.0 * rng.uniform());
      const auto r = lemma_X_property(pr.nu, pr.X);
      EXPECT_TRUE(r.holds);
      EXPECT_NEAR(r.nu_E * r.nu_E - r.X_E * r.X_E, 2.0 * r.defect, 1e-8 * r.nu_E * r.nu_E);
      EXPECT_GE(r.defect, -1e-12);
    }
  }
}

TEST(LemmaX, EqualityInTwoDimensionalSpan) {
  // n = 1: d_t, nu and X always lie in one 2-plane.
  const double a = 0.8;
  Eigen::Vector2d nu(std::sinh(a), std::cosh(a)), X(std::cosh(a), std::sinh(a));
  const auto r = lemma_X_property(nu, X);
  EXPECT_NEAR(r.defect, 0.0, 1e-14);
  EXPECT_NEAR(r.X_E, r.nu_E, 1e-14);
}

TEST(LemmaX, RejectsMalformedInput) {
  Eigen::Vector2d nu(0.0, 1.0), X(1.0, 0.0);
  EXPECT_NO_THROW(lemma_X_property(nu, X));
  EXPECT_THROW(lemma_X_property(Eigen::Vector2d(0.0, 2.0), X), sl::PreconditionError);
  EXPECT_THROW(lemma_X_property(nu, Eigen::Vector2d(2.0, 0.0)), sl::PreconditionError);
  EXPECT_THROW(lemma_X_property(nu, Eigen::Vector2d(1.0, 0.5)), sl::PreconditionError);
  EXPECT_THROW(lemma_X_property(nu, Eigen::Vector3d(1.0, 0.0, 0.0)), sl::PreconditionError);
}
