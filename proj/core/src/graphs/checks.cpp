#include "solitonlab/graphs/checks.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include <Eigen/Cholesky>

#include "solitonlab/error.hpp"

namespace solitonlab::graphs {

namespace {

void require_soliton(const GraphHypersurface& g, const char* what) {
  if (!g.soliton_claim()) {
    throw PreconditionError(std::string(what) + ": the graph is not flagged as a soliton");
  }
}

double largest(std::initializer_list<double> terms) {
  double s = 1.0;
  for (double t : terms) s = std::max(s, std::abs(t));
  return s;
}

void require_vector(const GraphPoint& p, const Eigen::VectorXd& X) {
  if (X.size() != p.dimension()) throw PreconditionError("tangent vector dimension mismatch");
}

}  // namespace

IdentityResidual height_gradient_check(const GraphHypersurface& g, std::span<const double> x) {
  require_soliton(g, "height_gradient_check");
  const GraphPoint p = g.at(x, 2);
  const double grad_sq = p.induced.inner(p.u, p.u);
  const double h2 = p.H.value() * p.H.value() / (p.c * p.c);
  const double rhs = p.epsilon * (1.0 - h2);
  return {grad_sq, rhs, largest({grad_sq, rhs, h2})};
}

IdentityResidual hessian_height_check(const GraphPoint& p, const Eigen::VectorXd& X) {
  require_vector(p, X);
  const double lhs = p.c * X.dot(p.induced.hessian(p.u) * X);
  const Eigen::MatrixXd g = p.induced_metric();
  const double rhs = p.epsilon * p.H.value() * X.dot(g * (p.shape_operator() * X));
  return {lhs, rhs, largest({lhs, rhs})};
}

IdentityResidual hessian_height_check(const GraphHypersurface& g, std::span<const double> x,
                                      const Eigen::VectorXd& X) {
  require_soliton(g, "hessian_height_check");
  return hessian_height_check(g.at(x, 3), X);
}

IdentityResidual drift_laplacian_H_check(const GraphHypersurface& g, std::span<const double> x) {
  require_soliton(g, "drift_laplacian_H_check");
  const GraphPoint p = g.at(x, 4);
  const double lap_H = p.induced.laplacian(p.H);
  const double lhs = -p.epsilon * lap_H;
  const double drift = p.c * p.induced.inner(p.H, p.u);
  const Eigen::VectorXd nu = p.normal_M();
  const double ric = nu.dot(p.base.ricci() * nu);
  const Eigen::MatrixXd A = p.shape_operator();
  const double A2 = (A * A).trace();
  const double H = p.H.value();
  return {lhs, drift + (ric + A2) * H, largest({lhs, drift, ric * H, A2 * H})};
}

IdentityResidual gauss_equation_ricci_check(const GraphPoint& p, const Eigen::VectorXd& X) {
  require_vector(p, X);
  const int n = p.dimension();
  const double lhs = X.dot(p.induced.ricci() * X);
  const Eigen::VectorXd nu = p.normal_M();
  const double ric_bar = X.dot(p.base.ricci() * X);
  const chart::Tensor4 R = p.base.riemann();
  double r_bar = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r_bar += R(i, j, k, l) * X(i) * nu(j) * X(k) * nu(l);
  const Eigen::MatrixXd g = p.induced_metric();
  const Eigen::VectorXd AX = p.shape_operator() * X;
  const double hA = p.H.value() * X.dot(g * AX);
  const double AX2 = AX.dot(g * AX);
  const double rhs = ric_bar - p.epsilon * r_bar + hA - p.epsilon * AX2;
  return {lhs, rhs, largest({lhs, ric_bar, r_bar, hA, AX2})};
}

IdentityResidual gauss_equation_ricci_check(const GraphHypersurface& g, std::span<const double> x,
                                            const Eigen::VectorXd& X) {
  return gauss_equation_ricci_check(g.at(x, 3), X);
}

BakryEmerySlack bakry_emery_check(const GraphHypersurface& g, std::span<const double> x, const Eigen::VectorXd& X,
                                  double G_at_r, double kappa) {
  require_soliton(g, "bakry_emery_check");
  const GraphPoint p = g.at(x, 3);
  require_vector(p, X);
  if (p.H.value() > G_at_r) {
    throw PreconditionError("bakry_emery_check: H = " + std::to_string(p.H.value()) + " exceeds G(r) = " +
                            std::to_string(G_at_r));
  }
  BakryEmerySlack out;
  const Eigen::MatrixXd gm = p.induced_metric();
  out.ric_ch = X.dot(p.induced.ricci() * X) + p.c * X.dot(p.induced.hessian(p.u) * X);
  out.bound_term = p.dimension() * kappa / (p.c * p.c) * G_at_r * G_at_r * X.dot(gm * X);
  out.slack = out.ric_ch + out.bound_term;
  return out;
}

double qiu_chen_slack(double f, double drift_laplacian_f, double grad_f_sq, double c, int n) {
  const double q = 1.0 - f * f;
  return -f * drift_laplacian_f + 3.0 * grad_f_sq - (c * c / n) * q * q;
}

QiuChenTerms qiu_chen_inequality_check(const GraphHypersurface& g, std::span<const double> x) {
  require_soliton(g, "qiu_chen_inequality_check");
  const GraphPoint p = g.at(x, 4);
  const Jet ratio = p.H * (1.0 / p.c);
  const Jet f = -numerics::reciprocal(numerics::sqrt(1.0 + ratio * ratio));
  QiuChenTerms out;
  out.f = f.value();
  out.drift_laplacian = p.induced.laplacian(f) - p.c * p.induced.inner(p.u, f);
  out.grad_sq = p.induced.inner(f, f);
  out.slack = qiu_chen_slack(out.f, out.drift_laplacian, out.grad_sq, p.c, p.dimension());
  return out;
}

NuERelation nu_E_relation_check(const GraphHypersurface& g, std::span<const double> x) {
  require_soliton(g, "nu_E_relation_check");
  if (g.epsilon() != -1) throw PreconditionError("nu_E_relation_check: lorentzian graphs only");
  const GraphPoint p = g.at(x, 2);
  const Eigen::VectorXd nu = p.normal_M();
  NuERelation out;
  out.nu_E_sq = nu.dot(p.base_metric() * nu) + p.nu_R.value() * p.nu_R.value();
  out.H_over_c_sq = p.H.value() * p.H.value() / (p.c * p.c);
  out.residual = out.nu_E_sq - (2.0 * out.H_over_c_sq - 1.0);
  const double slack = 1e-12 * std::max(1.0, out.nu_E_sq);
  out.bounds_hold = out.H_over_c_sq <= out.nu_E_sq + slack && out.nu_E_sq < 2.0 * out.H_over_c_sq;
  return out;
}

double self_adjointness_defect(const GraphPoint& p, const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
  const Eigen::MatrixXd g = p.induced_metric();
  const Eigen::MatrixXd A = p.shape_operator();
  return (A * X).dot(g * Y) - X.dot(g * (A * Y));
}

Eigen::VectorXd sample_unit_vector(const Eigen::MatrixXd& metric, numerics::Rng& rng) {
  const Eigen::LLT<Eigen::MatrixXd> llt(metric);
  if (llt.info() != Eigen::Success) throw DomainError("sample_unit_vector: metric not positive definite");
  Eigen::VectorXd z(metric.rows());
  double norm = 0.0;
  while (norm < 1e-12) {
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
    norm = z.norm();
  }
  // g = L L^T, so v = L^{-T} z / |z| has g(v, v) = 1 and is uniform.
  return llt.matrixU().solve(z / norm);
}

}  // namespace solitonlab::graphs
