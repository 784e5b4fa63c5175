#pragma once

// The conformal-surface translator: a graph t = f(y) over
// (R x (-1, 1), phi(y)^{-2}(dx^2 + dy^2)) in the Lorentzian product, with
// z = phi f' solving  phi z' = (1 - z^2)(phi' z + 1),  z(0) = 0.

#include <memory>
#include <vector>

#include "solitonlab/graphs/graph.hpp"
#include "solitonlab/numerics/ode.hpp"
#include "solitonlab/zoo/phi_profile.hpp"

namespace solitonlab::zoo {

struct ProfileOptions {
  double delta = 1e-6;     // integrate on [-(1 - delta), 1 - delta]
  double rtol = 1e-12;
  double atol = 1e-14;
  double z_margin = 1e-8;  // stop if |z| reaches 1 - z_margin
};

class SolitonProfile {
 public:
  const PhiProfile& phi() const { return phi_; }
  double delta() const { return delta_; }
  double y_max() const { return y_max_; }  // 1 - delta

  // Values on [-y_max, y_max].
  double z(double y) const;
  double dz(double y) const;  // right-hand side of the ODE
  double f(double y) const;
  double H(double y) const;   // 1 / sqrt(1 - z^2)
  double r_M(double y) const;  // int_0^y dt / phi

  // Closed forms on the tails |y| > 1/2, the numerical integral in between.
  double w(double y) const;
  // Cumulative integral of sqrt(1 - z^2)/phi over the whole range.
  double w_numeric(double y) const;

  double z_plus() const { return z_plus_; }
  double z_minus() const { return z_minus_; }
  double c_plus() const { return c_plus_; }
  double c_minus() const { return c_minus_; }

  // z^(k)(y0)/k! and f^(k)(y0)/k! for k = 0..order, by Picard iteration on
  // jets.
  std::vector<double> z_taylor(double y0, int order) const;
  std::vector<double> f_taylor(double y0, int order) const;

  const numerics::OdeTrajectory& forward() const { return forward_; }
  const numerics::OdeTrajectory& backward() const { return backward_; }

 private:
  friend SolitonProfile solve_profile_ode(const PhiProfile& phi, const ProfileOptions& options);
  SolitonProfile(PhiProfile phi) : phi_(std::move(phi)) {}

  void check_range(double y) const;
  const numerics::OdeTrajectory& branch(double y) const { return y >= 0.0 ? forward_ : backward_; }
  double cumulative(const std::vector<double>& table, double (SolitonProfile::*integrand)(double) const,
                    double y) const;
  double f_integrand(double y) const;
  double w_integrand(double y) const;

  PhiProfile phi_;
  double delta_ = 0.0;
  double y_max_ = 0.0;
  numerics::OdeTrajectory forward_;
  numerics::OdeTrajectory backward_;
  std::vector<double> f_fwd_, f_bwd_;  // f at breakpoints, from 0 outward
  std::vector<double> w_fwd_, w_bwd_;
  double z_plus_ = 0.0, z_minus_ = 0.0, c_plus_ = 0.0, c_minus_ = 0.0;
};

// Integrates forward and backward from y = 0; throws NumericalError if z
// fails to increase or reaches |z| = 1 - z_margin before |y| = 1 - delta.
SolitonProfile solve_profile_ode(const PhiProfile& phi, const ProfileOptions& options = {});

// Closed-form tails: w = sqrt((1+z)/(1-z)) + c_+ for y > 1/2 and
// w = -sqrt((1-z)/(1+z)) + c_- for y < -1/2, with their inverses.
double w_tail_plus(double z, double c_plus);
double w_tail_minus(double z, double c_minus);
double z_from_w_plus(double w, double c_plus);

// Exact first integral on y > 1/2, where phi = 1 - y:
//   -ln(1 - y) + ln(1/2) = G(z) - G(z_+),
//   G(z) = (1/4) ln((1+z)/(1-z)) + 1/(2(1-z)).
double tail_first_integral(double z);

// Sampled growth tables.
struct GrowthRowW {
  double w, H, ratio;  // ratio = H / w
};
struct GrowthRowRM {
  double y, r_M, H, ratio;  // ratio = H / sqrt(r_M)
};

// H along the axis x = 0 against the intrinsic distance |w|, for w up to
// w_max (>= 50); beyond the integrated range the closed forms are used.
std::vector<GrowthRowW> growth_ratio_r(const SolitonProfile& p, double w_max, int samples = 20);
// H against r_M for y = 1 - 10^{-k/2} up to y_max (>= 1 - 1e-6).
std::vector<GrowthRowRM> growth_ratio_rM(const SolitonProfile& p, double y_max);

// The translator as a graph over the conformal base (epsilon = -1, c = 1).
graphs::GraphHypersurface profile_graph(const SolitonProfile& p);
chart::ChartMetric profile_base_metric(const PhiProfile& phi);

struct ProfileRow {
  double y, z, f, w, H, phi, K;
};
std::vector<ProfileRow> profile_table(const SolitonProfile& p, int samples);

}  // namespace solitonlab::zoo
