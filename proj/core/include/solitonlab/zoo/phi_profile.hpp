#pragma once

#include <vector>

#include "solitonlab/numerics/jet.hpp"

namespace solitonlab::zoo {

using numerics::Jet;

// Even conformal factor phi on (-1, 1) with
//   phi(y) = 1 - |y|          for 1/2 <= |y| < 1,
//   |phi'(y)| < 1, phi'' <= 0 for |y| < 1/2.
// Built as phi(y) = C - int_0^y s, where s is an odd smooth step equal to
// sign(t) for |t| >= 1/2, assembled from the exp(-beta/x) bump; C is chosen so
// that the two formulas join with all derivatives at |y| = 1/2.
class PhiProfile {
 public:
  explicit PhiProfile(double beta = 1.0);

  double beta() const { return beta_; }
  double phi0() const { return C_; }

  double step(double t) const;  // s(t) = -phi'(t)
  double value(double y) const;
  double derivative(double y) const;
  double second_derivative(double y) const;

  // phi^(k)(y0) / k! for k = 0..order.
  std::vector<double> taylor(double y0, int order) const;
  // phi composed with a jet of y (any number of variables).
  Jet operator()(const Jet& y) const;

  // Gauss curvature of phi^{-2}(dx^2 + dy^2) at height y.
  double gauss_curvature(double y) const;

 private:
  Jet step_jet(double t0, int order) const;  // univariate jet of s at t0
  double step_integral(double t) const;      // int_0^t s for t in [0, 1/2]

  double beta_;
  double C_ = 0.0;
  std::vector<double> table_;  // int_0^{k h} s, h = 1 / (2 * (size - 1))
};

// Builds phi and verifies its defining properties on a dense sample;
// throws PreconditionError when any of them fails.
PhiProfile build_phi(double beta = 1.0);

}  // namespace solitonlab::zoo
