#pragma once

// Adaptive Dormand-Prince 5(4) integration with dense output and a
// terminal event.

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "solitonlab/error.hpp"

namespace solitonlab::numerics {

using State = std::vector<double>;

// dydt = f(t, y); dydt is pre-sized to y.size().
using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

// Integration stops at the first sign change of the event function
// (relative to its sign at t0). The crossing is located on the dense output.
using OdeEvent = std::function<double(double t, std::span<const double> y)>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0.0;  // 0 selects a step automatically
  double max_step = std::numeric_limits<double>::infinity();
  std::size_t max_steps = 1'000'000;
};

enum class OdeStatus { reached_end, event };

class OdeTrajectory {
 public:
  // Breakpoints in increasing order regardless of the integration direction.
  std::span<const double> breakpoints() const { return times_; }
  const std::vector<State>& states() const { return states_; }
  std::size_t size() const { return times_.size(); }
  std::size_t dimension() const { return states_.empty() ? 0 : states_.front().size(); }

  double t_min() const { return times_.front(); }
  double t_max() const { return times_.back(); }

  // Value at the parameter where integration started / ended.
  double t_start() const { return forward_ ? times_.front() : times_.back(); }
  double t_end() const { return forward_ ? times_.back() : times_.front(); }
  const State& state_at_end() const { return forward_ ? states_.back() : states_.front(); }

  OdeStatus status() const { return status_; }

  // Sum over accepted steps of the max-norm local error estimate.
  double local_error_sum() const { return local_error_sum_; }

  // Dense (4th order continuous) evaluation anywhere in [t_min, t_max].
  State operator()(double t) const;
  double component(double t, std::size_t i) const;

 private:
  friend OdeTrajectory integrate_ode(const OdeRhs&, double, State, double, const OdeOptions&,
                                     const OdeEvent*);

  struct Step {
    double t0;
    double h;
    std::array<State, 5> rcont;
  };

  std::size_t locate(double t) const;

  bool forward_ = true;
  std::vector<double> times_;
  std::vector<State> states_;
  std::vector<Step> steps_;  // steps_[k] spans [times_[k], times_[k+1]]
  OdeStatus status_ = OdeStatus::reached_end;
  double local_error_sum_ = 0.0;
};

// Thrown when the step size underflows; reports the last reachable t.
class OdeStepUnderflow : public NumericalError {
 public:
  OdeStepUnderflow(const std::string& what, double last_t) : NumericalError(what), last_t_(last_t) {}
  double last_t() const { return last_t_; }

 private:
  double last_t_;
};

// Integrates from t0 to t1 (t1 < t0 integrates backwards).
OdeTrajectory integrate_ode(const OdeRhs& rhs, double t0, State y0, double t1,
                            const OdeOptions& options = {}, const OdeEvent* stop = nullptr);

}  // namespace solitonlab::numerics
