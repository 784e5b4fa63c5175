#pragma once

// Pointwise tensor calculus on a chart.
//
// Curvature follows the convention R(V,W) = nabla_[V,W] - [nabla_V, nabla_W],
// the negative of the usual one, with the lowered tensor
// R(X,Y,Z,T) = g(R(X,Y)Z, T). Under this convention the sectional curvature
// of the plane spanned by v, w is R(v,w,v,w) / (|v|^2 |w|^2 - g(v,w)^2),
// which is +1 on the round sphere. Ricci is the usual one (positive on
// spheres).

#include <span>
#include <vector>

#include <Eigen/Core>

#include "solitonlab/chart/chart_metric.hpp"

namespace solitonlab::chart {

// Dense n^3 array, index order (k, i, j) for Gamma^k_ij.
struct Tensor3 {
  int n = 0;
  std::vector<double> v;
  double operator()(int k, int i, int j) const { return v[static_cast<std::size_t>((k * n + i) * n + j)]; }
};

// Dense n^4 array, index order (i, j, k, l).
struct Tensor4 {
  int n = 0;
  std::vector<double> v;
  double operator()(int i, int j, int k, int l) const {
    return v[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  }
};

// Metric jets around one point together with derived connection data.
// Quantities whose jet order would drop below zero are unavailable and
// throw PreconditionError.
class LocalGeometry {
 public:
  LocalGeometry() = default;
  LocalGeometry(const ChartMetric& metric, std::span<const double> x, int order = 4);
  explicit LocalGeometry(JetMatrix g);

  int dimension() const { return g_.size(); }
  int order() const { return g_.order(); }
  const JetMatrix& metric() const { return g_; }
  const JetMatrix& inverse_metric() const { return ginv_; }

  // Gamma^k_ij as a jet (order - 1).
  const Jet& christoffel_jet(int k, int i, int j) const;
  Tensor3 christoffel() const;

  Tensor4 riemann() const;
  Eigen::MatrixXd ricci() const;
  double sectional(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const;

  // f is a jet in the chart variables around the same point.
  Eigen::MatrixXd hessian(const Jet& f) const;
  Eigen::VectorXd gradient(const Jet& f) const;  // g^{ij} d_j f
  double inner(const Jet& f, const Jet& h) const;  // g(grad f, grad h)
  double laplacian(const Jet& f) const;           // trace of the hessian
  double laplacian_divergence(const Jet& f) const;  // |g|^{-1/2} d_i(|g|^{1/2} g^{ij} d_j f)
  double drift_laplacian(const Jet& f, const Jet& h) const;

  // Hessian of f as jets of order f.order() - 2 (for chained derivatives).
  JetMatrix hessian_jets(const Jet& f) const;

 private:
  void build();

  JetMatrix g_;
  JetMatrix ginv_;
  std::vector<Jet> gamma_;  // (k, i, j)
};

Tensor3 christoffel(const ChartMetric& m, std::span<const double> x);
Tensor4 riemann(const ChartMetric& m, std::span<const double> x);
Eigen::MatrixXd ricci(const ChartMetric& m, std::span<const double> x);
double sectional(const ChartMetric& m, std::span<const double> x, const Eigen::VectorXd& v,
                 const Eigen::VectorXd& w);
Eigen::MatrixXd hessian(const ChartMetric& m, const ScalarField& f, std::span<const double> x);
double laplacian(const ChartMetric& m, const ScalarField& f, std::span<const double> x);
double laplacian_divergence(const ChartMetric& m, const ScalarField& f, std::span<const double> x);
double drift_laplacian(const ChartMetric& m, const ScalarField& f, const ScalarField& h,
                       std::span<const double> x);

// Gauss curvature of phi^{-2}(dx^2 + dy^2) at a point where phi depends on
// y only: K = phi phi'' - phi'^2.
double gauss_curvature_conformal(double phi, double dphi, double ddphi);

}  // namespace solitonlab::chart
