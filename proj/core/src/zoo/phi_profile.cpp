#include "solitonlab/zoo/phi_profile.hpp"

#include <cmath>
#include <string>

#include "solitonlab/chart/geometry.hpp"
#include "solitonlab/error.hpp"
#include "solitonlab/numerics/quadrature.hpp"

namespace solitonlab::zoo {

namespace {

constexpr int kTableIntervals = 512;
constexpr double kBumpCutoff = 700.0;  // exp(-700) is below every tolerance used

void check_domain(double y) {
  if (!(std::abs(y) < 1.0)) throw DomainError("phi: y = " + std::to_string(y) + " outside (-1, 1)");
}

}  // namespace

PhiProfile::PhiProfile(double beta) : beta_(beta) {
  if (!(beta > 0.0)) throw PreconditionError("PhiProfile: beta must be positive");
  const double h = 0.5 / kTableIntervals;
  auto s = [this](double t) { return step(t); };
  table_.assign(kTableIntervals + 1, 0.0);
  for (int k = 1; k <= kTableIntervals; ++k) {
    table_[k] = table_[k - 1] + numerics::quad_adaptive(s, (k - 1) * h, k * h, 1e-16);
  }
  C_ = 0.5 + table_.back();
}

Jet PhiProfile::step_jet(double t0, int order) const {
  if (std::abs(t0) >= 0.5) return Jet(1, order, t0 > 0 ? 1.0 : -1.0);
  const Jet x = Jet::variable(1, order, 0, t0 + 0.5);
  auto bump = [&](const Jet& a) {
    if (beta_ / a.value() > kBumpCutoff) return Jet(1, order, 0.0);
    return numerics::exp(-beta_ * numerics::reciprocal(a));
  };
  const Jet e1 = bump(x);
  const Jet e2 = bump(1.0 - x);
  return 2.0 * e1 / (e1 + e2) - 1.0;
}

double PhiProfile::step(double t) const {
  if (std::abs(t) >= 0.5) return t > 0 ? 1.0 : -1.0;
  return step_jet(t, 0).value();
}

double PhiProfile::step_integral(double t) const {
  const double h = 0.5 / kTableIntervals;
  const int k = std::min(static_cast<int>(t / h), kTableIntervals);
  if (t <= k * h) return table_[k];
  return table_[k] + numerics::gauss_kronrod15([this](double u) { return step(u); }, k * h, t);
}

double PhiProfile::value(double y) const {
  check_domain(y);
  const double a = std::abs(y);
  if (a >= 0.5) return 1.0 - a;
  return C_ - step_integral(a);
}

double PhiProfile::derivative(double y) const {
  check_domain(y);
  return -step(y);
}

double PhiProfile::second_derivative(double y) const {
  check_domain(y);
  if (std::abs(y) >= 0.5) return 0.0;
  return -step_jet(y, 1).coefficient({1, 0, 0});
}

std::vector<double> PhiProfile::taylor(double y0, int order) const {
  check_domain(y0);
  std::vector<double> c(order + 1, 0.0);
  c[0] = value(y0);
  if (order == 0) return c;
  const Jet s = step_jet(y0, order - 1);
  for (int k = 1; k <= order; ++k) c[k] = -s.coefficient({k - 1, 0, 0}) / k;
  return c;
}

Jet PhiProfile::operator()(const Jet& y) const { return numerics::compose(taylor(y.value(), y.order()), y); }

double PhiProfile::gauss_curvature(double y) const {
  return chart::gauss_curvature_conformal(value(y), derivative(y), second_derivative(y));
}

PhiProfile build_phi(double beta) {
  PhiProfile phi(beta);
  constexpr int kSamples = 4000;
  for (int k = 1; k < kSamples; ++k) {
    const double y = -1.0 + 2.0 * k / kSamples;
    const double v = phi.value(y);
    auto fail = [&](const char* what) {
      throw PreconditionError(std::string("build_phi: ") + what + " violated at y = " + std::to_string(y));
    };
    if (!(v > 0.0)) fail("phi > 0");
    if (std::abs(v - phi.value(-y)) > 1e-14) fail("evenness");
    if (std::abs(y) < 0.5) {
      // 1 - |phi'| = 2 E(x) / (E(x) + E(1 - x)) with x = 1/2 - |y| is positive
      // but drops below double resolution once beta / x exceeds about 37.
      const double d = std::abs(phi.derivative(y));
      if (d > 1.0 || (d == 1.0 && beta / (0.5 - std::abs(y)) < 30.0)) fail("|phi'| < 1");
      if (phi.second_derivative(y) > 1e-14) fail("phi'' <= 0");
    } else if (std::abs(v - (1.0 - std::abs(y))) > 1e-13) {
      fail("phi = 1 - |y|");
    }
  }
  return phi;
}

}  // namespace solitonlab::zoo
