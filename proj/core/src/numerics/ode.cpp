#include "solitonlab/numerics/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace solitonlab::numerics {

namespace {

// Dormand-Prince 5(4) tableau with Hairer's dense output coefficients.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

void check_finite(std::span<const double> v, double t) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw NumericalError("integrate_ode: non-finite right-hand side at t = " + std::to_string(t));
    }
  }
}

State dense_eval(const std::array<State, 5>& r, double theta) {
  const double theta1 = 1.0 - theta;
  State y(r[0].size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = r[0][i] + theta * (r[1][i] + theta1 * (r[2][i] + theta * (r[3][i] + theta1 * r[4][i])));
  }
  return y;
}

}  // namespace

std::size_t OdeTrajectory::locate(double t) const {
  if (steps_.empty()) return 0;
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t k = it == times_.begin() ? 0 : static_cast<std::size_t>(it - times_.begin()) - 1;
  return std::min(k, steps_.size() - 1);
}

State OdeTrajectory::operator()(double t) const {
  const double span = std::max(1.0, std::abs(t_max() - t_min()));
  if (t < t_min() - 1e-12 * span || t > t_max() + 1e-12 * span) {
    throw PreconditionError("OdeTrajectory: t = " + std::to_string(t) + " outside [" +
                            std::to_string(t_min()) + ", " + std::to_string(t_max()) + "]");
  }
  if (steps_.empty()) return states_.front();
  const Step& s = steps_[locate(t)];
  return dense_eval(s.rcont, (t - s.t0) / s.h);
}

double OdeTrajectory::component(double t, std::size_t i) const { return (*this)(t)[i]; }

OdeTrajectory integrate_ode(const OdeRhs& rhs, double t0, State y0, double t1, const OdeOptions& opt,
                            const OdeEvent* stop) {
  if (!(opt.rtol > 0.0) || !(opt.atol > 0.0)) {
    throw PreconditionError("integrate_ode: rtol and atol must be positive");
  }
  const std::size_t n = y0.size();
  const double dir = t1 >= t0 ? 1.0 : -1.0;

  OdeTrajectory traj;
  traj.forward_ = dir > 0;
  traj.times_.push_back(t0);
  traj.states_.push_back(y0);

  if (t1 == t0) return traj;

  std::array<State, 7> k;
  for (auto& ki : k) ki.assign(n, 0.0);
  State ytmp(n), y1(n), err(n);

  auto eval = [&](double t, const State& y, State& out) {
    rhs(t, y, out);
    check_finite(out, t);
  };

  auto error_norm = [&](const State& ya, const State& yb) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sk = opt.atol + opt.rtol * std::max(std::abs(ya[i]), std::abs(yb[i]));
      acc += (err[i] / sk) * (err[i] / sk);
    }
    return std::sqrt(acc / static_cast<double>(std::max<std::size_t>(n, 1)));
  };

  State y = y0;
  double t = t0;
  eval(t, y, k[0]);

  double h = opt.initial_step;
  if (h <= 0.0) {
    // Hairer's starting step heuristic.
    double d0 = 0.0, d1n = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sk = opt.atol + opt.rtol * std::abs(y[i]);
      d0 += (y[i] / sk) * (y[i] / sk);
      d1n += (k[0][i] / sk) * (k[0][i] / sk);
    }
    d0 = std::sqrt(d0 / n);
    d1n = std::sqrt(d1n / n);
    double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
    h0 = std::min(h0, std::abs(t1 - t0));
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + dir * h0 * k[0][i];
    eval(t + dir * h0, ytmp, k[1]);
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sk = opt.atol + opt.rtol * std::abs(y[i]);
      d2 += ((k[1][i] - k[0][i]) / sk) * ((k[1][i] - k[0][i]) / sk);
    }
    d2 = std::sqrt(d2 / n) / h0;
    const double dm = std::max(d1n, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
    h = std::min({100.0 * h0, h1, std::abs(t1 - t0)});
  }
  h = std::min(h, opt.max_step);

  double event_prev = 0.0;
  if (stop != nullptr) event_prev = (*stop)(t, y);

  std::size_t steps = 0;
  bool last = false;
  while (!last) {
    if (++steps > opt.max_steps) {
      throw OdeStepUnderflow("integrate_ode: step budget exhausted", t);
    }
    const double remaining = std::abs(t1 - t);
    if (h >= remaining) {
      h = remaining;
      last = true;
    }
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      throw OdeStepUnderflow("integrate_ode: step size underflow at t = " + std::to_string(t), t);
    }
    const double hs = dir * h;

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * a21 * k[0][i];
    eval(t + c2 * hs, ytmp, k[1]);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * (a31 * k[0][i] + a32 * k[1][i]);
    eval(t + c3 * hs, ytmp, k[2]);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + hs * (a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]);
    eval(t + c4 * hs, ytmp, k[3]);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + hs * (a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] + a54 * k[3][i]);
    eval(t + c5 * hs, ytmp, k[4]);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + hs * (a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] + a64 * k[3][i] +
                             a65 * k[4][i]);
    const double tnew = last ? t1 : t + hs;
    eval(tnew, ytmp, k[5]);
    for (std::size_t i = 0; i < n; ++i)
      y1[i] = y[i] + hs * (a71 * k[0][i] + a73 * k[2][i] + a74 * k[3][i] + a75 * k[4][i] +
                           a76 * k[5][i]);
    eval(tnew, y1, k[6]);
    for (std::size_t i = 0; i < n; ++i)
      err[i] = hs * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] + e6 * k[5][i] +
                     e7 * k[6][i]);
    const double enorm = error_norm(y, y1);

    if (!std::isfinite(enorm) || enorm > 1.0) {
      const double fac = std::isfinite(enorm) ? std::max(0.2, 0.9 * std::pow(enorm, -0.2)) : 0.2;
      h *= fac;
      last = false;
      continue;
    }

    OdeTrajectory::Step step;
    step.t0 = t;
    step.h = hs;
    step.rcont[0] = y;
    step.rcont[1].resize(n);
    step.rcont[2].resize(n);
    step.rcont[3].resize(n);
    step.rcont[4].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double ydiff = y1[i] - y[i];
      const double bspl = hs * k[0][i] - ydiff;
      step.rcont[1][i] = ydiff;
      step.rcont[2][i] = bspl;
      step.rcont[3][i] = ydiff - hs * k[6][i] - bspl;
      step.rcont[4][i] = hs * (d1 * k[0][i] + d3 * k[2][i] + d4 * k[3][i] + d5 * k[4][i] +
                               d6 * k[5][i] + d7 * k[6][i]);
    }
    double err_max = 0.0;
    for (double e : err) err_max = std::max(err_max, std::abs(e));
    traj.local_error_sum_ += err_max;

    bool event_hit = false;
    double t_event = tnew;
    if (stop != nullptr) {
      const double g_new = (*stop)(tnew, y1);
      if (g_new == 0.0 || (g_new > 0.0) != (event_prev > 0.0)) {
        // Bisection on the dense output over theta in [0, 1].
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200 && (hi - lo) * std::abs(hs) > 1e-15 * std::max(1.0, std::abs(t));
             ++it) {
          const double mid = 0.5 * (lo + hi);
          const double g_mid = (*stop)(t + mid * hs, dense_eval(step.rcont, mid));
          if (g_mid == 0.0 || (g_mid > 0.0) != (event_prev > 0.0)) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        t_event = t + hi * hs;
        y1 = dense_eval(step.rcont, hi);
        event_hit = true;
      }
      event_prev = g_new;
    }

    traj.steps_.push_back(std::move(step));
    traj.times_.push_back(event_hit ? t_event : tnew);
    traj.states_.push_back(y1);

    if (event_hit) {
      traj.status_ = OdeStatus::event;
      break;
    }

    t = tnew;
    y = y1;
    k[0] = k[6];
    const double fac = enorm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(enorm, -0.2), 0.2, 5.0);
    h = std::min(h * fac, opt.max_step);
  }

  if (!traj.forward_) {
    std::reverse(traj.times_.begin(), traj.times_.end());
    std::reverse(traj.states_.begin(), traj.states_.end());
    std::reverse(traj.steps_.begin(), traj.steps_.end());
  }
  return traj;
}

}  // namespace solitonlab::numerics
