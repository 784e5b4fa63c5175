#include "solitonlab/graphs/graph.hpp"

#include <cmath>
#include <string>

#include "solitonlab/error.hpp"

namespace solitonlab::graphs {

ProductSpace::ProductSpace(ChartMetric base, int epsilon) : base_(std::move(base)), eps_(epsilon) {
  if (epsilon != 1 && epsilon != -1) throw PreconditionError("ProductSpace: epsilon must be +1 or -1");
  if (base_.signature() != chart::Signature::riemannian) {
    throw PreconditionError("ProductSpace: the base metric must be riemannian");
  }
}

Eigen::VectorXd GraphPoint::normal_M() const {
  Eigen::VectorXd v(dimension());
  for (int i = 0; i < dimension(); ++i) v(i) = nu_M[i].value();
  return v;
}

GraphHypersurface::GraphHypersurface(ProductSpace space, ScalarField u, double c, bool soliton_claim)
    : space_(std::move(space)), u_(std::move(u)), c_(c), soliton_claim_(soliton_claim) {
  if (!(c > 0.0)) throw PreconditionError("GraphHypersurface: soliton speed c must be positive");
  if (!u_) throw PreconditionError("GraphHypersurface: empty height function");
}

GraphPoint GraphHypersurface::at(std::span<const double> x, int order) const {
  const int n = dimension();
  if (static_cast<int>(x.size()) != n) throw PreconditionError("GraphHypersurface: point dimension mismatch");
  if (order < 2) throw PreconditionError("GraphHypersurface: jet order must be at least 2");
  const int eps = epsilon();

  GraphPoint p;
  p.epsilon = eps;
  p.c = c_;
  p.x.assign(x.begin(), x.end());
  const auto xs = numerics::coordinate_jets(x, order);
  p.u = u_(xs);
  p.base = LocalGeometry(space_.base().components(xs));
  const JetMatrix& ginv = p.base.inverse_metric();

  for (int i = 0; i < n; ++i) p.du.push_back(p.u.partial(i));
  Jet norm2 = p.du[0] * 0.0;
  for (int i = 0; i < n; ++i) {
    Jet gi = p.du[0] * 0.0;
    for (int j = 0; j < n; ++j) gi += ginv(i, j) * p.du[j];
    norm2 += gi * p.du[i];
    p.grad_u.push_back(gi);
  }
  const Jet w2 = 1.0 + eps * norm2;
  if (!(w2.value() > 0.0)) {
    throw DomainError("GraphHypersurface: spacelike condition 1 + eps|grad u|^2 > 0 fails at x[0] = " +
                      std::to_string(x[0]));
  }
  p.W = numerics::sqrt(w2);
  p.nu_R = numerics::reciprocal(p.W);
  for (int i = 0; i < n; ++i) p.nu_M.push_back(-static_cast<double>(eps) * p.grad_u[i] * p.nu_R);

  p.A = JetMatrix(n, n, order - 2);
  Jet trace = Jet(n, order - 2, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      Jet v = p.nu_M[k].partial(i);
      for (int j = 0; j < n; ++j) v += p.base.christoffel_jet(k, i, j) * p.nu_M[j];
      p.A(k, i) = -v;
    }
    trace += p.A(k, k);
  }
  p.H = static_cast<double>(eps) * trace;

  JetMatrix g(n, n, order - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = p.base.metric()(i, j) + static_cast<double>(eps) * p.du[i] * p.du[j];
  p.induced = LocalGeometry(std::move(g));

  if (soliton_claim_ && eps < 0 && p.H.value() < c_ * (1.0 - 1e-9)) {
    throw DomainError("GraphHypersurface: lorentzian soliton with H = " + std::to_string(p.H.value()) +
                      " < c = " + std::to_string(c_));
  }
  return p;
}

ChartMetric induced_metric(const GraphHypersurface& g) {
  const int n = g.dimension();
  return ChartMetric(n, [g, n](std::span<const Jet> xs) {
    // du loses one order, so u is evaluated on coordinate jets one order up.
    if (xs.empty() || xs[0].nvars() != n) throw PreconditionError("induced_metric: expects coordinate jets");
    std::vector<double> x0;
    for (const Jet& xi : xs) x0.push_back(xi.value());
    const std::vector<Jet> lifted = numerics::coordinate_jets(x0, xs[0].order() + 1);
    const Jet u = g.height()(lifted);
    const JetMatrix gm = g.space().base().components(xs);
    std::vector<Jet> du;
    for (int i = 0; i < n; ++i) du.push_back(u.partial(i));
    JetMatrix out(n, xs[0].nvars(), xs[0].order());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) = gm(i, j) + static_cast<double>(g.epsilon()) * du[i] * du[j];
    const Eigen::MatrixXd v = out.values();
    Jet det = chart::determinant(out);
    if (!(det.value() > 0.0) || !(v(0, 0) > 0.0)) {
      throw DomainError("induced_metric: spacelike condition fails");
    }
    return out;
  });
}

UnitNormal unit_normal(const GraphHypersurface& g, std::span<const double> x) {
  const GraphPoint p = g.at(x, 2);
  return {p.normal_M(), p.nu_R.value()};
}

Eigen::MatrixXd shape_operator(const GraphHypersurface& g, std::span<const double> x) {
  return g.at(x, 2).shape_operator();
}

double mean_curvature(const GraphHypersurface& g, std::span<const double> x) { return g.at(x, 2).mean_curvature(); }

double mean_curvature_soliton(const GraphHypersurface& g, std::span<const double> x) {
  return g.c() * g.at(x, 2).nu_R.value();
}

double soliton_residual(const GraphHypersurface& g, std::span<const double> x) {
  const GraphPoint p = g.at(x, 2);
  const int n = p.dimension();
  // V = grad u / W, div_M V = d_i V^i + Gamma^i_ij V^j.
  std::vector<Jet> V;
  for (int i = 0; i < n; ++i) V.push_back(p.grad_u[i] * p.nu_R);
  double div = 0.0;
  numerics::MultiIndex e{0, 0, 0};
  for (int i = 0; i < n; ++i) {
    e = {0, 0, 0};
    e[i] = 1;
    div += V[i].derivative(e);
    for (int j = 0; j < n; ++j) div += p.base.christoffel_jet(i, i, j).value() * V[j].value();
  }
  return div - g.c() * p.nu_R.value();
}

}  // namespace solitonlab::graphs
