#pragma once

// Pointwise identities and inequalities for graph solitons. Identity checks
// return both sides together with the largest term magnitude, so callers can
// apply a relative tolerance. All checks that assume the soliton equation
// throw PreconditionError when the graph is not flagged as a soliton.

#include <cmath>
#include <span>

#include <Eigen/Core>

#include "solitonlab/graphs/graph.hpp"
#include "solitonlab/numerics/random.hpp"

namespace solitonlab::graphs {

struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double scale = 1.0;  // max(1, largest |term|)

  double residual() const { return lhs - rhs; }
  double relative() const { return std::abs(lhs - rhs) / scale; }
};

// |grad h|^2 = eps (1 - H^2 / c^2), h the height function.
IdentityResidual height_gradient_check(const GraphHypersurface& g, std::span<const double> x);

// hess(c h)(X, X) = eps H g(AX, X); X in chart components of T_x Sigma.
IdentityResidual hessian_height_check(const GraphHypersurface& g, std::span<const double> x,
                                      const Eigen::VectorXd& X);

// -eps Lap H = g(grad H, grad(c h)) + (Ric_M(nu_M, nu_M) + |A|^2) H.
IdentityResidual drift_laplacian_H_check(const GraphHypersurface& g, std::span<const double> x);

// Ric_Sigma(X,X) computed from the induced metric against
// Ric_bar(X,X) - eps Rbar(X,nu,X,nu) + H g(AX,X) - eps |AX|^2.
// For eps = -1 this is the trace of the Gauss equation with all plus signs.
IdentityResidual gauss_equation_ricci_check(const GraphHypersurface& g, std::span<const double> x,
                                            const Eigen::VectorXd& X);

struct BakryEmerySlack {
  double ric_ch = 0.0;      // Ric_Sigma(X,X) + hess(c h)(X,X)
  double bound_term = 0.0;  // (n kappa / c^2) G^2 |X|^2
  double slack = 0.0;       // ric_ch + bound_term
};

// Lower bound Ric_ch(X,X) >= -(n kappa / c^2) G^2 |X|^2, where G_at_r is the
// bound function evaluated at the distance of x. Throws PreconditionError if
// H(x) > G_at_r.
BakryEmerySlack bakry_emery_check(const GraphHypersurface& g, std::span<const double> x, const Eigen::VectorXd& X,
                                  double G_at_r, double kappa);

struct QiuChenTerms {
  double f = 0.0;              // -1 / sqrt(1 + H^2/c^2)
  double drift_laplacian = 0.0;  // Lap f - g(grad(c h), grad f)
  double grad_sq = 0.0;        // |grad f|^2
  double slack = 0.0;
};

// -f Lap_ch f + 3 |grad f|^2 - (c^2/n) (1 - f^2)^2 from its terms.
double qiu_chen_slack(double f, double drift_laplacian_f, double grad_f_sq, double c, int n);

QiuChenTerms qiu_chen_inequality_check(const GraphHypersurface& g, std::span<const double> x);

struct NuERelation {
  double nu_E_sq = 0.0;  // |nu|_E^2 in g_M + dt^2
  double H_over_c_sq = 0.0;
  double residual = 0.0;  // nu_E_sq - (2 H^2/c^2 - 1)
  bool bounds_hold = false;  // H^2/c^2 <= |nu|_E^2 < 2 H^2/c^2
};

NuERelation nu_E_relation_check(const GraphHypersurface& g, std::span<const double> x);

// g(AX, Y) - g(X, AY).
double self_adjointness_defect(const GraphPoint& p, const Eigen::VectorXd& X, const Eigen::VectorXd& Y);

// Point-level variants for callers that evaluate many vectors at one point.
IdentityResidual hessian_height_check(const GraphPoint& p, const Eigen::VectorXd& X);
IdentityResidual gauss_equation_ricci_check(const GraphPoint& p, const Eigen::VectorXd& X);

// Uniform sample on the unit sphere of a positive definite metric.
Eigen::VectorXd sample_unit_vector(const Eigen::MatrixXd& metric, numerics::Rng& rng);

}  // namespace solitonlab::graphs
