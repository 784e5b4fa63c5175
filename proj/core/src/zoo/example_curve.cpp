#include "solitonlab/zoo/example_curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "solitonlab/error.hpp"
#include "solitonlab/numerics/quadrature.hpp"

namespace solitonlab::zoo {

namespace {

// Quintic smoothstep S(t) = 6t^5 - 15t^4 + 10t^3 and P' = S, P(0) = 0.
double smoothstep(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }

}  // namespace

PiecewiseCurve::PiecewiseCurve(std::vector<Segment> segments, std::vector<Witness> witnesses)
    : segs_(std::move(segments)), witnesses_(std::move(witnesses)) {
  if (segs_.empty()) throw PreconditionError("PiecewiseCurve: no segments");
  for (std::size_t k = 0; k < segs_.size(); ++k) {
    if (!(segs_[k].b > segs_[k].a) || !(segs_[k].scale > 0.0)) {
      throw PreconditionError("PiecewiseCurve: degenerate segment");
    }
    if (k > 0 && segs_[k].a != segs_[k - 1].b) throw PreconditionError("PiecewiseCurve: segments must be contiguous");
  }
}

const PiecewiseCurve::Segment& PiecewiseCurve::locate(double x) const {
  if (x < x_min() || x > x_max()) {
    throw DomainError("PiecewiseCurve: x = " + std::to_string(x) + " outside the constructed range");
  }
  auto it = std::upper_bound(segs_.begin(), segs_.end(), x, [](double v, const Segment& s) { return v < s.a; });
  return it == segs_.begin() ? segs_.front() : *(it - 1);
}

double PiecewiseCurve::value(double x) const {
  const Segment& s = locate(x);
  const double t = (x - s.a) / s.scale;
  double v = 0.0;
  for (std::size_t k = s.coeffs.size(); k-- > 0;) v = v * t + s.coeffs[k];
  return v;
}

double PiecewiseCurve::derivative(double x) const {
  const Segment& s = locate(x);
  const double t = (x - s.a) / s.scale;
  double v = 0.0;
  for (std::size_t k = s.coeffs.size(); k-- > 1;) v = v * t + k * s.coeffs[k];
  return v / s.scale;
}

Jet PiecewiseCurve::operator()(const Jet& x) const {
  const Segment& s = locate(x.value());
  const Jet t = (x - s.a) / s.scale;
  Jet v = t * 0.0;
  for (std::size_t k = s.coeffs.size(); k-- > 0;) v = v * t + s.coeffs[k];
  return v;
}

std::vector<double> PiecewiseCurve::breakpoints() const {
  std::vector<double> b;
  for (const Segment& s : segs_) b.push_back(s.a);
  b.push_back(segs_.back().b);
  return b;
}

PiecewiseCurve build_example_curve(int n_min, int n_max) {
  if (n_min > n_max) throw PreconditionError("build_example_curve: empty period range");
  std::vector<PiecewiseCurve::Segment> segs;
  std::vector<PiecewiseCurve::Witness> wit;
  for (int n = n_min; n <= n_max; ++n) {
    const double b = 5.0 * n;
    const double e = std::ldexp(1.0, -(std::abs(n) + 1));
    const double d = 0.5 * e;
    const double m = 1.0 / (1.0 + d);
    const double md = m * d;
    segs.push_back({b, b + 1.0, 1.0, {0.0}});
    // Rise: slope 0 -> m, constant m over unit length, m -> 0.
    segs.push_back({b + 1.0, b + 1.0 + d, d, {0, 0, 0, 0, 2.5 * md, -3.0 * md, md}});
    segs.push_back({b + 1.0 + d, b + 2.0 + d, d, {0.5 * md, md}});
    segs.push_back({b + 2.0 + d, b + 2.0 + e, d, {1.0 - 0.5 * md, md, 0, 0, -2.5 * md, 3.0 * md, -md}});
    if (b + 3.0 - e > b + 2.0 + e) segs.push_back({b + 2.0 + e, b + 3.0 - e, 1.0, {1.0}});
    // Fall: the mirror image.
    segs.push_back({b + 3.0 - e, b + 3.0 - d, d, {1.0, 0, 0, 0, -2.5 * md, 3.0 * md, -md}});
    segs.push_back({b + 3.0 - d, b + 4.0 - d, d, {1.0 - 0.5 * md, -md}});
    segs.push_back({b + 4.0 - d, b + 4.0, d, {0.5 * md, -md, 0, 0, 2.5 * md, -3.0 * md, md}});
    segs.push_back({b + 4.0, b + 5.0, 1.0, {0.0}});

    // Mean value witness on the first transition: m S(t) = 1 / (1 + e).
    const double target = 1.0 / (1.0 + e);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      (m * smoothstep(mid) < target ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    wit.push_back({n, b + 1.0 + d * t, m * smoothstep(t)});
  }
  return PiecewiseCurve(std::move(segs), std::move(wit));
}

double example_curve_length(const PiecewiseCurve& curve, double a, double b) {
  if (a > b) throw PreconditionError("example_curve_length: a must not exceed b");
  auto speed = [&curve](double x) {
    const double s = curve.derivative(x);
    if (!(std::abs(s) < 1.0)) throw DomainError("example_curve_length: non-spacelike tangent");
    return std::sqrt((1.0 - s) * (1.0 + s));
  };
  double total = 0.0;
  for (const auto& s : curve.segments()) {
    const double lo = std::max(a, s.a);
    const double hi = std::min(b, s.b);
    if (hi > lo) total += numerics::quad_adaptive(speed, lo, hi, 1e-13);
  }
  return total;
}

ExampleCurveReport example_curve_checks(const PiecewiseCurve& curve) {
  ExampleCurveReport r;
  const double step = 1e-3;
  r.max_slope = 0.0;
  for (double x = curve.x_min(); x <= curve.x_max(); x += step) {
    r.max_slope = std::max(r.max_slope, std::abs(curve.derivative(x)));
  }
  for (const auto& s : curve.segments()) {
    // The slope attains its maximum m on the linear pieces.
    if (s.coeffs.size() == 2) r.max_slope = std::max(r.max_slope, std::abs(s.coeffs[1] / s.scale));
  }
  r.spacelike = r.max_slope < 1.0;

  r.pattern_ok = true;
  for (const auto& w : curve.witnesses()) {
    const double b = 5.0 * w.n;
    const double e = std::ldexp(1.0, -(std::abs(w.n) + 1));
    for (int k = 0; k <= 100; ++k) {
      const double t = k / 100.0;
      if (std::abs(curve.value(b + t)) > 1e-14 || std::abs(curve.value(b + 4.0 + t)) > 1e-14) r.pattern_ok = false;
      const double xp = b + 2.0 + e + t * (1.0 - 2.0 * e);
      if (std::abs(curve.value(xp) - 1.0) > 1e-14) r.pattern_ok = false;
    }

    ExampleCurveReport::WitnessCheck c;
    c.n = w.n;
    c.x = w.x;
    c.slope = curve.derivative(w.x);
    c.gamma = 1.0 / std::sqrt((1.0 - c.slope) * (1.0 + c.slope));
    c.bound = std::pow(2.0, 0.5 * (std::abs(w.n) - 1));
    c.ok = std::abs(c.slope - 1.0 / (1.0 + e)) < 1e-12 && c.gamma >= c.bound;
    r.witnesses.push_back(c);
    if (w.n >= 0) r.period_lengths.push_back(example_curve_length(curve, b, b + 5.0));
  }
  if (curve.x_min() <= 0.0 && curve.x_max() >= 50.0) r.length_0_50 = example_curve_length(curve, 0.0, 50.0);
  return r;
}

}  // namespace solitonlab::zoo
