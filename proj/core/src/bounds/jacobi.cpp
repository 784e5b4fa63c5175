#include "solitonlab/bounds/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "solitonlab/error.hpp"
#include "solitonlab/numerics/ode.hpp"

namespace solitonlab::bounds {

namespace {

using numerics::State;

// ln(sinh(kt) / k) without overflow.
double log_sinh_over_k(double k, double t) {
  const double x = k * t;
  return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0 * k);
}

}  // namespace

JacobiReport jacobi_comparison(const BoundFunction& Gbar, double T, const JacobiOptions& opt) {
  if (!Gbar.conditions().all_hold()) {
    throw PreconditionError("jacobi_comparison: Gbar must satisfy (i), (ii) and (iii)");
  }
  if (!(T > 2.0)) throw PreconditionError("jacobi_comparison: T must exceed 2");
  if (!(opt.sample_step > 0.0 && opt.sample_step <= 1.0)) {
    throw PreconditionError("jacobi_comparison: sample_step must lie in (0, 1]");
  }
  numerics::OdeOptions ode;
  ode.rtol = opt.rtol;
  ode.atol = opt.atol;

  // (w, w', I) on [0, 1].
  const numerics::OdeRhs linear = [&Gbar](double t, std::span<const double> y, std::span<double> dy) {
    const double g = Gbar(t);
    dy[0] = y[1];
    dy[1] = g * g * y[0];
    dy[2] = g;
  };
  // (v, ln w, ln w', I) on [1, T].
  const numerics::OdeRhs riccati = [&Gbar](double t, std::span<const double> y, std::span<double> dy) {
    const double g = Gbar(t);
    dy[0] = g * g - y[0] * y[0];
    dy[1] = y[0];
    dy[2] = g * g / y[0];
    dy[3] = g;
  };

  JacobiReport rep;
  rep.positivity_ok = true;
  std::vector<double> times;
  const auto n = static_cast<long>(std::ceil(T / opt.sample_step - 1e-9));
  for (long i = 1; i <= n; ++i) times.push_back(std::min(T, i * opt.sample_step));
  times.push_back(1.0);
  times.push_back(2.0);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(), [](double a, double b) { return b - a < 1e-9; }), times.end());
  for (double& x : times) {
    if (std::abs(x - 1.0) < 1e-9) x = 1.0;
    if (std::abs(x - 2.0) < 1e-9) x = 2.0;
  }

  State lin{0.0, 1.0, 0.0};
  State ric;
  double t = 0.0;
  for (double tn : times) {
    JacobiSample s{};
    s.t = tn;
    if (tn <= 1.0) {
      lin = numerics::integrate_ode(linear, t, lin, tn, ode).state_at_end();
      if (!(lin[0] > 0.0 && lin[1] > 0.0)) rep.positivity_ok = false;
      s.log_w = std::log(lin[0]);
      s.log_dw = std::log(lin[1]);
      s.ratio = lin[1] / lin[0];
      s.integral = lin[2];
      if (tn == 1.0) ric = {s.ratio, s.log_w, s.log_dw, s.integral};
    } else {
      ric = numerics::integrate_ode(riccati, t, ric, tn, ode).state_at_end();
      if (!(ric[0] > 0.0)) rep.positivity_ok = false;
      s.ratio = ric[0];
      s.log_w = ric[1];
      s.log_dw = ric[2];
      s.integral = ric[3];
    }
    s.G = Gbar(tn);
    // w'' = Gbar^2 w is positive exactly when Gbar is.
    if (!(s.G > 0.0) || !std::isfinite(s.log_w) || !std::isfinite(s.log_dw)) rep.positivity_ok = false;
    s.wronskian_bound = s.G / -std::expm1(-s.integral);
    rep.samples.push_back(s);
    t = tn;
  }

  auto integral_at = [&rep](double tt) {
    for (const auto& s : rep.samples) {
      if (s.t == tt) return s.integral;
    }
    throw NumericalError("jacobi_comparison: missing sample");
  };
  const double I1 = integral_at(1.0);
  const double I2 = integral_at(2.0);
  rep.lambda2 = std::exp(I2) / std::expm1(I2 - I1);

  rep.wronskian_ok = true;
  rep.bound_ok = true;
  bool constant = true;
  const double k = Gbar(0.0);
  for (const auto& s : rep.samples) {
    if (s.ratio > s.wronskian_bound * (1.0 + 1e-9)) rep.wronskian_ok = false;
    if (s.t >= 2.0) {
      const double q = s.ratio / (rep.lambda2 * s.G);
      rep.max_bound_ratio = std::max(rep.max_bound_ratio, q);
      if (q > 1.0) rep.bound_ok = false;
    }
    if (s.G != k) constant = false;
  }
  if (constant) {
    rep.sinh_max_rel_error = 0.0;
    for (const auto& s : rep.samples) {
      const double e = std::abs(std::expm1(s.log_w - log_sinh_over_k(k, s.t)));
      rep.sinh_max_rel_error = std::max(rep.sinh_max_rel_error, e);
    }
  }
  return rep;
}

}  // namespace solitonlab::bounds
