#pragma once

// A spacelike entire curve t = u(x) in the Lorentz plane that is complete but
// admits no monotone primary bound. On each period [5n, 5n + 5]:
//   u = 0 on [5n, 5n + 1] and [5n + 4, 5n + 5],
//   u rises to 1 over [5n + 1, 5n + 2 + e_n], stays 1 until 5n + 3 - e_n,
//   and falls back to 0 by 5n + 4,  with e_n = 2^{-(|n| + 1)}.
// Each ramp has slope 0 -> m -> 0 with quintic smoothstep transitions of
// width e_n / 2, so u is C^3 and piecewise polynomial, and m < 1.

#include <vector>

#include "solitonlab/numerics/jet.hpp"

namespace solitonlab::zoo {

using numerics::Jet;

class PiecewiseCurve {
 public:
  struct Segment {
    double a, b;                  // x in [a, b]
    double scale;                 // local variable t = (x - a) / scale
    std::vector<double> coeffs;   // u = sum_k coeffs[k] t^k
  };
  struct Witness {
    int n;
    double x;     // point with u' = 1 / (1 + e_n)
    double slope;
  };

  PiecewiseCurve(std::vector<Segment> segments, std::vector<Witness> witnesses);

  double x_min() const { return segs_.front().a; }
  double x_max() const { return segs_.back().b; }
  const std::vector<Segment>& segments() const { return segs_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }

  double value(double x) const;
  double derivative(double x) const;
  Jet operator()(const Jet& x) const;

  // Breakpoints of the segments (for piecewise quadrature).
  std::vector<double> breakpoints() const;

 private:
  const Segment& locate(double x) const;

  std::vector<Segment> segs_;
  std::vector<Witness> witnesses_;
};

// Periods n = n_min .. n_max.
PiecewiseCurve build_example_curve(int n_min = -10, int n_max = 10);

struct ExampleCurveReport {
  bool spacelike = false;        // max |u'| < 1
  double max_slope = 0.0;
  bool pattern_ok = false;       // u = 0 / 1 on the stated subintervals
  struct WitnessCheck {
    int n;
    double x, slope, gamma, bound;  // gamma = 1/sqrt(1 - u'^2), bound = 2^{(|n|-1)/2}
    bool ok;
  };
  std::vector<WitnessCheck> witnesses;
  std::vector<double> period_lengths;  // induced length of each period with n >= 0
  double length_0_50 = 0.0;            // induced length over [0, 50]
};

ExampleCurveReport example_curve_checks(const PiecewiseCurve& curve);

// Induced length of the graph of u over [a, b] in dx^2 - dt^2.
double example_curve_length(const PiecewiseCurve& curve, double a, double b);

}  // namespace solitonlab::zoo
