#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "solitonlab/chart/jet_matrix.hpp"

namespace solitonlab::chart {

using numerics::Jet;

enum class Signature { riemannian, lorentzian_last };

// A function on a chart, evaluated on coordinate jets so that derivatives
// come along with the value.
class ScalarField {
 public:
  using Evaluator = std::function<Jet(std::span<const Jet> x)>;

  ScalarField() = default;
  explicit ScalarField(Evaluator f) : f_(std::move(f)) {}

  Jet operator()(std::span<const Jet> x) const { return f_(x); }
  Jet at(std::span<const double> x, int order) const;
  double value(std::span<const double> x) const { return at(x, 0).value(); }
  explicit operator bool() const { return static_cast<bool>(f_); }

  static ScalarField constant(double c);
  static ScalarField coordinate(int index);

 private:
  Evaluator f_;
};

// Metric components g_ij on a coordinate box, returned as jets.
class ChartMetric {
 public:
  using Evaluator = std::function<JetMatrix(std::span<const Jet> x)>;

  ChartMetric() = default;
  ChartMetric(int dimension, Evaluator g, Signature signature = Signature::riemannian);

  int dimension() const { return n_; }
  Signature signature() const { return sig_; }

  // Components at coordinate jets; symmetry and signature are checked at
  // the base point (DomainError on violation).
  JetMatrix components(std::span<const Jet> x) const;
  JetMatrix components_at(std::span<const double> x, int order) const;
  Eigen::MatrixXd at(std::span<const double> x) const;

  static ChartMetric euclidean(int n);
  // lambda(x) * (dx_1^2 + ... + dx_n^2).
  static ChartMetric conformal(int n, ScalarField lambda);
  // base + epsilon dt^2 on (x, t); lorentzian when epsilon < 0.
  static ChartMetric product(const ChartMetric& base, double epsilon);

 private:
  int n_ = 0;
  Evaluator g_;
  Signature sig_ = Signature::riemannian;
};

}  // namespace solitonlab::chart
