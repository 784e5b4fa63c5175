#pragma once

#include <vector>

#include "solitonlab/numerics/quadrature.hpp"

namespace solitonlab::numerics {

enum class DivergenceVerdict { divergent, convergent, inconclusive };

const char* to_string(DivergenceVerdict v);

struct DivergenceProbeOptions {
  int decades = 8;                 // last checkpoint at a + 10^decades
  double cauchy_tol = 1e-6;        // relative tail bound for "convergent"
  double slope_drift = 0.02;       // allowed relative drop of s * slope(s) per decade
};

struct DivergenceTrace {
  DivergenceVerdict verdict = DivergenceVerdict::inconclusive;
  std::vector<double> checkpoints;     // T_k = 10^k, partial integral over [a, a + T_k]
  std::vector<double> partial_sums;
  std::vector<double> log_slopes;      // d(partial)/d(ln(1+T)) at each checkpoint
  double tail_estimate = 0.0;          // geometric tail bound used by the convergent test
};

// Numerical heuristic for whether the integral of a positive f over
// [a, infinity) diverges. Integrates in s = ln(1 + t - a) up to the last
// checkpoint. Never a proof: closed-form families should be classified
// analytically instead.
DivergenceTrace divergence_probe(const ScalarFunction& f, double a, const DivergenceProbeOptions& options = {});

}  // namespace solitonlab::numerics
