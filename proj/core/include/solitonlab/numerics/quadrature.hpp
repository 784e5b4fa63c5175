#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "solitonlab/error.hpp"

namespace solitonlab::numerics {

using ScalarFunction = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double error = 0.0;       // estimated absolute error
  std::size_t panels = 0;   // panels in the final partition
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_panels = 4000;
};

class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, double estimate, double error_bound)
      : NumericalError(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Globally adaptive Gauss-Kronrod (7/15) quadrature; never throws on
// non-convergence, the result carries the flag instead.
QuadResult integrate_adaptive(const ScalarFunction& f, double a, double b, const QuadOptions& options);

// Estimate of the integral of f over [a, b] with absolute error below tol.
// Throws QuadratureError (with the best estimate and bound) when the panel
// budget runs out.
double quad_adaptive(const ScalarFunction& f, double a, double b, double tol = 1e-10);

// Single 15-point Kronrod panel, for callers that manage their own partition.
double gauss_kronrod15(const ScalarFunction& f, double a, double b, double* error = nullptr);

// Cumulative integrals F(x_k) = integral_{x_0}^{x_k} f over increasing nodes.
std::vector<double> cumulative_integral(const ScalarFunction& f, const std::vector<double>& nodes,
                                        double tol = 1e-12);

}  // namespace solitonlab::numerics
