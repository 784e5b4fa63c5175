#include "solitonlab/numerics/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace solitonlab::numerics {

const char* to_string(DivergenceVerdict v) {
  switch (v) {
    case DivergenceVerdict::divergent:
      return "divergent";
    case DivergenceVerdict::convergent:
      return "convergent";
    case DivergenceVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

DivergenceTrace divergence_probe(const ScalarFunction& f, double a, const DivergenceProbeOptions& opt) {
  if (opt.decades < 8) throw PreconditionError("divergence_probe: checkpoints must reach at least 1e8");
  // Integrand after t = a + e^s - 1.
  auto g = [&](double s) {
    const double es = std::exp(s);
    const double t = a + es - 1.0;
    const double v = f(t);
    if (!(v > 0.0)) {
      throw PreconditionError("divergence_probe: f must be positive, got " + std::to_string(v) +
                              " at t = " + std::to_string(t));
    }
    return v * es;
  };

  DivergenceTrace trace;
  double s_prev = 0.0;
  double acc = 0.0;
  for (int k = 0; k <= opt.decades; ++k) {
    const double T = std::pow(10.0, k);
    const double s = std::log1p(T);
    QuadOptions qo;
    qo.abs_tol = 1e-13;
    qo.rel_tol = 1e-12;
    const QuadResult r = integrate_adaptive(g, s_prev, s, qo);
    acc += r.value;
    trace.checkpoints.push_back(T);
    trace.partial_sums.push_back(acc);
    trace.log_slopes.push_back(g(s));
    s_prev = s;
  }

  const std::size_t K = trace.checkpoints.size() - 1;
  // Divergent: s * slope(s) does not decay over the last three decades,
  // i.e. the slope decays no faster than 1 / ln t.
  bool flat = true;
  for (std::size_t k = K - 1; k <= K; ++k) {
    const double sk = std::log1p(trace.checkpoints[k]);
    const double sk1 = std::log1p(trace.checkpoints[k - 1]);
    const double now = sk * trace.log_slopes[k];
    const double before = sk1 * trace.log_slopes[k - 1];
    if (now < before * (1.0 - opt.slope_drift)) flat = false;
  }
  if (flat) {
    trace.verdict = DivergenceVerdict::divergent;
    return trace;
  }

  // Convergent: geometric decay of the per-decade increments with a tail
  // bound below tolerance.
  double q_max = 0.0;
  bool decaying = true;
  for (std::size_t k = K - 1; k <= K; ++k) {
    const double d_now = trace.partial_sums[k] - trace.partial_sums[k - 1];
    const double d_before = trace.partial_sums[k - 1] - trace.partial_sums[k - 2];
    if (!(d_before > 0.0)) {
      decaying = d_now <= 0.0;
      continue;
    }
    const double q = d_now / d_before;
    if (!(q < 1.0)) decaying = false;
    q_max = std::max(q_max, q);
  }
  const double d_last = trace.partial_sums[K] - trace.partial_sums[K - 1];
  if (decaying && q_max < 1.0) {
    trace.tail_estimate = d_last * q_max / (1.0 - q_max);
    if (trace.tail_estimate <= opt.cauchy_tol * std::max(1.0, std::abs(trace.partial_sums[K]))) {
      trace.verdict = DivergenceVerdict::convergent;
      return trace;
    }
  } else {
    trace.tail_estimate = std::numeric_limits<double>::infinity();
  }
  trace.verdict = DivergenceVerdict::inconclusive;
  return trace;
}

}  // namespace solitonlab::numerics
