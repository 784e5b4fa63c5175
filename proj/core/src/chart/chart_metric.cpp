#include "solitonlab/chart/chart_metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "solitonlab/error.hpp"

namespace solitonlab::chart {

Jet ScalarField::at(std::span<const double> x, int order) const {
  if (!f_) throw PreconditionError("ScalarField: empty field");
  const auto jets = numerics::coordinate_jets(x, order);
  return f_(jets);
}

ScalarField ScalarField::constant(double c) {
  return ScalarField([c](std::span<const Jet> x) { return Jet(x[0].nvars(), x[0].order(), c); });
}

ScalarField ScalarField::coordinate(int index) {
  return ScalarField([index](std::span<const Jet> x) {
    if (index < 0 || index >= static_cast<int>(x.size())) {
      throw PreconditionError("ScalarField::coordinate: index out of range");
    }
    return x[index];
  });
}

ChartMetric::ChartMetric(int dimension, Evaluator g, Signature signature)
    : n_(dimension), g_(std::move(g)), sig_(signature) {
  if (n_ < 1 || n_ > 3) throw PreconditionError("ChartMetric: dimension must be 1..3");
  if (!g_) throw PreconditionError("ChartMetric: empty evaluator");
  if (sig_ == Signature::lorentzian_last && n_ < 2) {
    throw PreconditionError("ChartMetric: a lorentzian metric needs dimension >= 2");
  }
}

JetMatrix ChartMetric::components(std::span<const Jet> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw PreconditionError("ChartMetric: expected " + std::to_string(n_) + " coordinates");
  }
  JetMatrix g = g_(x);
  if (g.size() != n_) throw PreconditionError("ChartMetric: evaluator returned a matrix of the wrong size");
  const Eigen::MatrixXd v = g.values();
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if (!v.allFinite()) throw DomainError("ChartMetric: non-finite metric component");
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("ChartMetric: metric components are not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending
  const double floor = 1e-14 * scale;
  if (sig_ == Signature::riemannian) {
    if (!(ev(0) > floor)) throw DomainError("ChartMetric: riemannian metric is not positive definite");
  } else {
    if (!(ev(0) < -floor) || (n_ > 1 && !(ev(1) > floor))) {
      throw DomainError("ChartMetric: metric does not have lorentzian signature");
    }
  }
  return g;
}

JetMatrix ChartMetric::components_at(std::span<const double> x, int order) const {
  const auto jets = numerics::coordinate_jets(x, order);
  return components(jets);
}

Eigen::MatrixXd ChartMetric::at(std::span<const double> x) const { return components_at(x, 0).values(); }

ChartMetric ChartMetric::euclidean(int n) {
  return ChartMetric(n, [n](std::span<const Jet> x) {
    JetMatrix g(n, x[0].nvars(), x[0].order());
    for (int i = 0; i < n; ++i) g(i, i) += 1.0;
    return g;
  });
}

ChartMetric ChartMetric::conformal(int n, ScalarField lambda) {
  return ChartMetric(n, [n, lambda](std::span<const Jet> x) {
    const Jet l = lambda(x);
    JetMatrix g(n, x[0].nvars(), l.order());
    for (int i = 0; i < n; ++i) g(i, i) = l;
    return g;
  });
}

ChartMetric ChartMetric::product(const ChartMetric& base, double epsilon) {
  if (epsilon == 0.0) throw PreconditionError("ChartMetric::product: epsilon must be non-zero");
  const int n = base.dimension() + 1;
  const Signature sig = epsilon < 0 ? Signature::lorentzian_last : Signature::riemannian;
  return ChartMetric(
      n,
      [base, epsilon, n](std::span<const Jet> x) {
        const JetMatrix gb = base.components(x.first(n - 1));
        JetMatrix g(n, x[0].nvars(), gb.order());
        for (int i = 0; i < n - 1; ++i)
          for (int j = 0; j < n - 1; ++j) g(i, j) = gb(i, j);
        g(n - 1, n - 1) += epsilon;
        return g;
      },
      sig);
}

}  // namespace solitonlab::chart
