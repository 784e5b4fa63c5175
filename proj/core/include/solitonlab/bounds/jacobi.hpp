#pragma once

// The comparison problem w'' = Gbar^2 w, w(0) = 0, w'(0) = 1 behind the
// drift Laplacian estimate of the distance function, and its bound
// w'/w <= lambda(2) Gbar(t) for t >= 2 with
//   lambda(t) = exp(int_0^t Gbar) / (exp(int_1^t Gbar) - 1).

#include <vector>

#include "solitonlab/bounds/bound_function.hpp"

namespace solitonlab::bounds {

struct JacobiOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  double sample_step = 0.05;
};

struct JacobiSample {
  double t;
  double log_w;      // w itself overflows for superlinear Gbar
  double log_dw;
  double ratio;      // w'/w
  double G;          // Gbar(t)
  double integral;   // int_0^t Gbar
  double wronskian_bound;  // f'/f for f = (exp(int_0^t Gbar) - 1) / Gbar(0)
};

struct JacobiReport {
  std::vector<JacobiSample> samples;
  double lambda2 = 0.0;
  bool positivity_ok = false;  // w, w', w'' > 0 on (0, T]
  bool wronskian_ok = false;   // f'w - w'f >= 0
  bool bound_ok = false;       // w'/w <= lambda(2) Gbar on [2, T]
  double max_bound_ratio = 0.0;  // max over t >= 2 of (w'/w) / (lambda(2) Gbar)
  // For constant Gbar = k: max relative deviation of w from sinh(kt)/k;
  // negative when Gbar is not constant on the samples.
  double sinh_max_rel_error = -1.0;
};

// Linear integration on [0, 1], then the Riccati form v = w'/w,
// v' = Gbar^2 - v^2, together with ln w and ln w' on [1, T].
JacobiReport jacobi_comparison(const BoundFunction& Gbar, double T, const JacobiOptions& options = {});

}  // namespace solitonlab::bounds
