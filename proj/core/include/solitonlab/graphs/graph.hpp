#pragma once

// Spacelike (or Riemannian) graphs t = u(x) in (M x R, g_M + eps dt^2).

#include <span>
#include <vector>

#include <Eigen/Core>

#include "solitonlab/chart/geometry.hpp"

namespace solitonlab::graphs {

using chart::ChartMetric;
using chart::JetMatrix;
using chart::LocalGeometry;
using chart::ScalarField;
using numerics::Jet;

class ProductSpace {
 public:
  ProductSpace(ChartMetric base, int epsilon);

  const ChartMetric& base() const { return base_; }
  int epsilon() const { return eps_; }
  int base_dimension() const { return base_.dimension(); }
  // The ambient metric g_M + eps dt^2, with t the last coordinate.
  ChartMetric ambient() const { return ChartMetric::product(base_, eps_); }

 private:
  ChartMetric base_;
  int eps_;
};

// Every jet-valued quantity of a graph at one base point. Orders: u and the
// base metric carry the requested order K; the gradient, W, normal and
// induced metric carry K - 1; A and H carry K - 2.
struct GraphPoint {
  int epsilon = -1;
  double c = 1.0;
  std::vector<double> x;
  Jet u;
  std::vector<Jet> du;      // d_i u
  std::vector<Jet> grad_u;  // (grad^M u)^i
  Jet W;
  std::vector<Jet> nu_M;    // -eps grad^M u / W
  Jet nu_R;                 // 1 / W
  JetMatrix A;              // A^k_i, column i is A(d_i)
  Jet H;                    // eps trace A
  LocalGeometry base;       // of g_M
  LocalGeometry induced;    // of g = g_M + eps du du

  int dimension() const { return static_cast<int>(x.size()); }
  Eigen::MatrixXd shape_operator() const { return A.values(); }
  double mean_curvature() const { return H.value(); }
  Eigen::MatrixXd induced_metric() const { return induced.metric().values(); }
  Eigen::MatrixXd base_metric() const { return base.metric().values(); }
  Eigen::VectorXd normal_M() const;
};

class GraphHypersurface {
 public:
  // c > 0 is the translation speed. soliton_claim gates the soliton identity
  // checks; it does not change any geometric computation.
  GraphHypersurface(ProductSpace space, ScalarField u, double c = 1.0, bool soliton_claim = false);

  const ProductSpace& space() const { return space_; }
  const ScalarField& height() const { return u_; }
  int epsilon() const { return space_.epsilon(); }
  int dimension() const { return space_.base_dimension(); }
  double c() const { return c_; }
  bool soliton_claim() const { return soliton_claim_; }

  // Throws DomainError where 1 + eps |grad u|^2 <= 0, and, on lorentzian
  // soliton claims, where H < c.
  GraphPoint at(std::span<const double> x, int order = 4) const;

 private:
  ProductSpace space_;
  ScalarField u_;
  double c_;
  bool soliton_claim_;
};

struct UnitNormal {
  Eigen::VectorXd nu_M;  // base components
  double nu_R = 0.0;
};

ChartMetric induced_metric(const GraphHypersurface& g);
UnitNormal unit_normal(const GraphHypersurface& g, std::span<const double> x);
Eigen::MatrixXd shape_operator(const GraphHypersurface& g, std::span<const double> x);
double mean_curvature(const GraphHypersurface& g, std::span<const double> x);
// eps c gbar(d_t, nu) = c nu_R; agrees with mean_curvature on solitons.
double mean_curvature_soliton(const GraphHypersurface& g, std::span<const double> x);
// div_M(grad u / W) - c / W.
double soliton_residual(const GraphHypersurface& g, std::span<const double> x);

}  // namespace solitonlab::graphs
