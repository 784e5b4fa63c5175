#include "solitonlab/zoo/soliton_profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "solitonlab/error.hpp"
#include "solitonlab/numerics/quadrature.hpp"

namespace solitonlab::zoo {

namespace {

double rhs_value(const PhiProfile& phi, double y, double z) {
  return (1.0 - z * z) * (phi.derivative(y) * z + 1.0) / phi.value(y);
}

double panel_integral(const numerics::ScalarFunction& f, double a, double b) {
  numerics::QuadOptions opt;
  opt.abs_tol = 1e-15;
  opt.rel_tol = 1e-14;
  return numerics::integrate_adaptive(f, a, b, opt).value;
}

// table[k] = int_0^{t_k} f over the breakpoints t_k of one branch.
std::vector<double> branch_table(const numerics::OdeTrajectory& traj, const numerics::ScalarFunction& f) {
  const auto t = traj.breakpoints();
  std::vector<double> table(t.size(), 0.0);
  if (t.front() >= 0.0) {
    for (std::size_t k = 1; k < t.size(); ++k) table[k] = table[k - 1] + panel_integral(f, t[k - 1], t[k]);
  } else {
    for (std::size_t k = t.size() - 1; k-- > 0;) table[k] = table[k + 1] - panel_integral(f, t[k], t[k + 1]);
  }
  return table;
}

void check_monotone(const numerics::OdeTrajectory& traj, const PhiProfile& phi) {
  const auto t = traj.breakpoints();
  const auto& s = traj.states();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!(rhs_value(phi, t[k], s[k][0]) > 0.0) || (k > 0 && !(s[k][0] > s[k - 1][0]))) {
      throw NumericalError("solve_profile_ode: z is not strictly increasing near y = " + std::to_string(t[k]));
    }
  }
}

}  // namespace

void SolitonProfile::check_range(double y) const {
  if (!(std::abs(y) <= y_max_)) {
    throw PreconditionError("SolitonProfile: y = " + std::to_string(y) + " outside the integrated range");
  }
}

double SolitonProfile::z(double y) const {
  check_range(y);
  return branch(y).component(y, 0);
}

double SolitonProfile::dz(double y) const { return rhs_value(phi_, y, z(y)); }

double SolitonProfile::H(double y) const {
  const double zz = z(y);
  return 1.0 / std::sqrt((1.0 - zz) * (1.0 + zz));
}

double SolitonProfile::f_integrand(double y) const { return z(y) / phi_.value(y); }

double SolitonProfile::w_integrand(double y) const {
  const double zz = z(y);
  return std::sqrt((1.0 - zz) * (1.0 + zz)) / phi_.value(y);
}

double SolitonProfile::cumulative(const std::vector<double>& table,
                                  double (SolitonProfile::*integrand)(double) const, double y) const {
  check_range(y);
  const auto t = branch(y).breakpoints();
  auto it = std::upper_bound(t.begin(), t.end(), y);
  std::size_t k = it == t.begin() ? 0 : static_cast<std::size_t>(it - t.begin()) - 1;
  k = std::min(k, t.size() - 1);
  if (y == t[k]) return table[k];
  return table[k] + panel_integral([this, integrand](double s) { return (this->*integrand)(s); }, t[k], y);
}

double SolitonProfile::f(double y) const {
  return cumulative(y >= 0.0 ? f_fwd_ : f_bwd_, &SolitonProfile::f_integrand, y);
}

double SolitonProfile::w_numeric(double y) const {
  return cumulative(y >= 0.0 ? w_fwd_ : w_bwd_, &SolitonProfile::w_integrand, y);
}

double SolitonProfile::w(double y) const {
  check_range(y);
  if (y > 0.5) return w_tail_plus(z(y), c_plus_);
  if (y < -0.5) return w_tail_minus(z(y), c_minus_);
  return w_numeric(y);
}

double SolitonProfile::r_M(double y) const {
  check_range(y);
  const double a = std::abs(y);
  auto inv_phi = [this](double t) { return 1.0 / phi_.value(t); };
  double r = numerics::quad_adaptive(inv_phi, 0.0, std::min(a, 0.5), 1e-13);
  if (a > 0.5) r += numerics::quad_adaptive(inv_phi, 0.5, a, 1e-11);
  return y >= 0.0 ? r : -r;
}

std::vector<double> SolitonProfile::z_taylor(double y0, int order) const {
  check_range(y0);
  const Jet Y = Jet::variable(1, order, 0, y0);
  const Jet phi = phi_(Y);
  const Jet dphi = order > 0 ? phi.partial(0) : Jet(1, 0, phi_.derivative(y0));
  const double z0 = z(y0);
  Jet Z(1, 0, z0);
  for (int it = 0; it < order; ++it) {
    const Jet R = (1.0 - Z * Z) * (dphi * Z + 1.0) / phi;
    Z = R.antiderivative() + z0;
  }
  std::vector<double> c(order + 1);
  for (int k = 0; k <= order; ++k) c[k] = Z.coefficient({k, 0, 0});
  return c;
}

std::vector<double> SolitonProfile::f_taylor(double y0, int order) const {
  std::vector<double> c(order + 1, 0.0);
  c[0] = f(y0);
  if (order == 0) return c;
  const std::vector<double> zc = z_taylor(y0, order - 1);
  Jet Z(1, order - 1, 0.0);
  for (int k = 0; k < order; ++k) Z.set_coefficient({k, 0, 0}, zc[k]);
  const Jet fprime = Z / phi_(Jet::variable(1, order - 1, 0, y0));
  const Jet F = fprime.antiderivative();
  for (int k = 1; k <= order; ++k) c[k] = F.coefficient({k, 0, 0});
  return c;
}

SolitonProfile solve_profile_ode(const PhiProfile& phi, const ProfileOptions& opt) {
  if (!(opt.delta > 0.0) || opt.delta > 1e-3) {
    throw PreconditionError("solve_profile_ode: delta must lie in (0, 1e-3]");
  }
  if (!(opt.z_margin > 0.0) || opt.z_margin >= 1.0) {
    throw PreconditionError("solve_profile_ode: z margin must lie in (0, 1)");
  }
  SolitonProfile p(phi);
  p.delta_ = opt.delta;
  p.y_max_ = 1.0 - opt.delta;

  const numerics::OdeRhs rhs = [&phi](double y, std::span<const double> z, std::span<double> dz) {
    dz[0] = rhs_value(phi, y, z[0]);
  };
  const double zmax = 1.0 - opt.z_margin;
  const numerics::OdeEvent stop = [zmax](double, std::span<const double> z) { return zmax - std::abs(z[0]); };
  numerics::OdeOptions o;
  o.rtol = opt.rtol;
  o.atol = opt.atol;
  p.forward_ = numerics::integrate_ode(rhs, 0.0, {0.0}, p.y_max_, o, &stop);
  p.backward_ = numerics::integrate_ode(rhs, 0.0, {0.0}, -p.y_max_, o, &stop);
  for (const auto* traj : {&p.forward_, &p.backward_}) {
    if (traj->status() == numerics::OdeStatus::event) {
      throw NumericalError("solve_profile_ode: |z| reached 1 - margin at y = " + std::to_string(traj->t_end()) +
                           " before |y| = 1 - delta");
    }
    check_monotone(*traj, phi);
  }

  const SolitonProfile& cp = p;
  auto fz = [&cp](double y) { return cp.f_integrand(y); };
  auto wz = [&cp](double y) { return cp.w_integrand(y); };
  p.f_fwd_ = branch_table(p.forward_, fz);
  p.f_bwd_ = branch_table(p.backward_, fz);
  p.w_fwd_ = branch_table(p.forward_, wz);
  p.w_bwd_ = branch_table(p.backward_, wz);

  p.z_plus_ = p.z(0.5);
  p.z_minus_ = p.z(-0.5);
  p.c_plus_ = p.w_numeric(0.5) - std::sqrt((1.0 + p.z_plus_) / (1.0 - p.z_plus_));
  p.c_minus_ = p.w_numeric(-0.5) + std::sqrt((1.0 - p.z_minus_) / (1.0 + p.z_minus_));
  return p;
}

double w_tail_plus(double z, double c_plus) { return std::sqrt((1.0 + z) / (1.0 - z)) + c_plus; }
double w_tail_minus(double z, double c_minus) { return -std::sqrt((1.0 - z) / (1.0 + z)) + c_minus; }

double z_from_w_plus(double w, double c_plus) {
  if (!(w > c_plus)) throw DomainError("z_from_w_plus: w must exceed c_+");
  const double q = (w - c_plus) * (w - c_plus);
  return (q - 1.0) / (q + 1.0);
}

double tail_first_integral(double z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("tail_first_integral: |z| must be < 1");
  return 0.25 * std::log((1.0 + z) / (1.0 - z)) + 0.5 / (1.0 - z);
}

std::vector<GrowthRowW> growth_ratio_r(const SolitonProfile& p, double w_max, int samples) {
  if (w_max < 50.0) throw PreconditionError("growth_ratio_r: w_max must be at least 50");
  if (samples < 1) throw PreconditionError("growth_ratio_r: need at least one sample");
  const double w_half = p.w_numeric(0.5);
  std::vector<GrowthRowW> rows;
  for (int k = 1; k <= samples; ++k) {
    const double w = w_max * k / samples;
    double z = 0.0;
    if (w >= w_half) {
      z = z_from_w_plus(w, p.c_plus());
    } else {
      double lo = 0.0, hi = 0.5;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p.w_numeric(mid) < w ? lo : hi) = mid;
      }
      z = p.z(0.5 * (lo + hi));
    }
    const double H = 1.0 / std::sqrt((1.0 - z) * (1.0 + z));
    rows.push_back({w, H, H / w});
  }
  return rows;
}

std::vector<GrowthRowRM> growth_ratio_rM(const SolitonProfile& p, double y_max) {
  if (y_max < 1.0 - 1e-6 * (1.0 + 1e-9)) throw PreconditionError("growth_ratio_rM: y_max must be >= 1 - 1e-6");
  if (y_max > p.y_max()) throw PreconditionError("growth_ratio_rM: y_max beyond the integrated range");
  std::vector<GrowthRowRM> rows;
  auto push = [&](double y) {
    const double r = p.r_M(y);
    const double H = p.H(y);
    rows.push_back({y, r, H, H / std::sqrt(r)});
  };
  for (int k = 1;; ++k) {
    const double y = 1.0 - std::pow(10.0, -0.5 * k);
    if (y >= y_max) break;
    push(y);
  }
  push(y_max);
  return rows;
}

chart::ChartMetric profile_base_metric(const PhiProfile& phi) {
  return chart::ChartMetric::conformal(2, chart::ScalarField([phi](std::span<const Jet> x) {
                                         const Jet v = phi(x[1]);
                                         return numerics::reciprocal(v * v);
                                       }));
}

graphs::GraphHypersurface profile_graph(const SolitonProfile& p) {
  auto shared = std::make_shared<const SolitonProfile>(p);
  chart::ScalarField u([shared](std::span<const Jet> x) {
    return numerics::compose(shared->f_taylor(x[1].value(), x[1].order()), x[1]);
  });
  return graphs::GraphHypersurface(graphs::ProductSpace(profile_base_metric(p.phi()), -1), u, 1.0, true);
}

std::vector<ProfileRow> profile_table(const SolitonProfile& p, int samples) {
  if (samples < 2) throw PreconditionError("profile_table: need at least two samples");
  std::vector<ProfileRow> rows;
  const double Y = p.y_max();
  for (int k = 0; k < samples; ++k) {
    const double y = Y * (static_cast<double>(2 * k - (samples - 1)) / (samples - 1));
    rows.push_back({y, p.z(y), p.f(y), p.w(y), p.H(y), p.phi().value(y), p.phi().gauss_curvature(y)});
  }
  return rows;
}

}  // namespace solitonlab::zoo
